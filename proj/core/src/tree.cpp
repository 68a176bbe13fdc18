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

#include <algorithm>

namespace veinforge::forest {

namespace {

__extension__ using u128 = unsigned __int128;

// Exact rational a / b with non-negative integer parts.
struct Ratio {
  u128 num;
  u128 den;
};

inline bool greater(const Ratio& a, const Ratio& b) noexcept { return a.num * b.den > b.num * a.den; }

}  // namespace

std::optional<Split> best_split(const LabeledMatrix& data, std::span<const std::size_t> samples,
                                std::span<const std::size_t> candidate_features, std::size_t min_samples_leaf) {
  const std::size_t n = samples.size();
  if (n < 2 || candidate_features.empty()) return std::nullopt;
  min_samples_leaf = std::max<std::size_t>(min_samples_leaf, 1);

  std::vector<std::uint64_t> parent(data.n_classes, 0);
  for (auto s : samples) ++parent[data.labels[s]];
  std::uint64_t parent_sq = 0;
  for (auto c : parent) parent_sq += c * c;
  // Weighted child Gini * n = n - (S_L / n_L + S_R / n_R) where S = sum of
  // squared class counts, so minimizing it maximizes S_L / n_L + S_R / n_R.
  const Ratio parent_score{parent_sq, n};

  std::vector<std::size_t> features(candidate_features.begin(), candidate_features.end());
  std::sort(features.begin(), features.end());

  std::optional<Split> best;
  Ratio best_score{0, 1};
  std::vector<std::pair<float, std::uint32_t>> column(n);
  std::vector<std::uint64_t> left(data.n_classes);
  std::vector<std::uint64_t> right(data.n_classes);

  for (std::size_t f : features) {
    for (std::size_t i = 0; i < n; ++i) column[i] = {data.at(samples[i], f), data.labels[samples[i]]};
    std::sort(column.begin(), column.end());
    if (column.front().first == column.back().first) continue;

    std::fill(left.begin(), left.end(), 0);
    right = parent;
    std::uint64_t left_sq = 0;
    std::uint64_t right_sq = parent_sq;
    for (std::size_t i = 1; i < n; ++i) {
      const std::uint32_t c = column[i - 1].second;
      left_sq += 2 * left[c] + 1;
      ++left[c];
      right_sq -= 2 * right[c] - 1;
      --right[c];
      if (column[i].first == column[i - 1].first) continue;
      const std::size_t n_left = i;
      const std::size_t n_right = n - i;
      if (n_left < min_samples_leaf || n_right < min_samples_leaf) continue;

      const Ratio score{static_cast<u128>(left_sq) * n_right + static_cast<u128>(right_sq) * n_left,
                        static_cast<u128>(n_left) * n_right};
      if (!greater(score, parent_score)) continue;
      if (best && !greater(score, best_score)) continue;

      const double lo = column[i - 1].first;
      const double hi = column[i].first;
      const double nd = static_cast<double>(n);
      const double parent_gini = 1.0 - static_cast<double>(parent_sq) / (nd * nd);
      const double child_gini =
          (static_cast<double>(n_left) - static_cast<double>(left_sq) / static_cast<double>(n_left) +
           static_cast<double>(n_right) - static_cast<double>(right_sq) / static_cast<double>(n_right)) / nd;
      best = Split{f, lo + (hi - lo) / 2.0, parent_gini - child_gini};
      best_score = score;
    }
  }
  return best;
}

}  // namespace veinforge::forest
