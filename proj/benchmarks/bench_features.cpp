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

#include "veinforge/features.hpp"
#include "veinforge/enhance.hpp"
#include "veinforge/synth.hpp"

#include <benchmark/benchmark.h>

using namespace veinforge;

static void BM_Lbp(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto img = synth::render_sample({1, 1, 7, side, side}, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(features::lbp_features(img, 8, 8));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_Lbp)->Arg(128)->Arg(256);

static void BM_MeanCurvature(benchmark::State& state) {
  const auto img = imaging::normalize(synth::render_sample({1, 1, 7, 256, 256}, 0, 0));
  for (auto _ : state) benchmark::DoNotOptimize(features::mc_features(img, 2.0, 16, 16));
}
BENCHMARK(BM_MeanCurvature);
