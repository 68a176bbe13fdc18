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

#include "veinforge/evaluation.hpp"
#include "veinforge/rng.hpp"

#include <benchmark/benchmark.h>

using namespace veinforge;

static eval::TrialSet trials(std::size_t n) {
  SplitMix64 rng(5);
  eval::TrialSet ts;
  for (std::size_t i = 0; i < n; ++i) {
    const bool genuine = i % 20 == 0;
    const double s = static_cast<double>(rng.below(101)) / 100.0;
    ts.add({i, "c", genuine, genuine ? std::min(1.0, s + 0.3) : s});
  }
  return ts;
}

static void BM_RocAuc(benchmark::State& state) {
  const auto ts = trials(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval::auc_trapezoid(eval::roc_curve(ts)));
}
BENCHMARK(BM_RocAuc)->Arg(1000)->Arg(100000);

static void BM_Eer(benchmark::State& state) {
  const auto ts = trials(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval::eer(ts));
}
BENCHMARK(BM_Eer)->Arg(1000)->Arg(100000);
