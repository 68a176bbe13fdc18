// Copyright 2026 The VeinForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "veinforge/forest.hpp"

namespace veinforge::forest {

double gini(std::span<const std::uint64_t> class_counts) {
  std::uint64_t total = 0;
  for (auto c : class_counts) total += c;
  if (total == 0) fail(ErrorCode::EmptyNode, "Gini impurity of an empty node");
  double sum = 0.0;
  const auto z = static_cast<double>(total);
  for (auto c : class_counts) {
    const double q = static_cast<double>(c) / z;
    sum += q * (1.0 - q);
  }
  return sum;
}

std::vector<std::size_t> bootstrap(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> out(n);
  for (auto& i : out) i = static_cast<std::size_t>(rng.below(n));
  return out;
}

}  // namespace veinforge::forest
