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

#include "veinforge/clahe.hpp"
#include "veinforge/enhance.hpp"
#include "veinforge/synth.hpp"

#include <benchmark/benchmark.h>

using namespace veinforge;

static imaging::GrayImage sample_image(std::size_t w, std::size_t h) {
  return synth::render_sample({1, 1, 7, w, h}, 0, 0);
}

static void BM_Clahe(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto img = sample_image(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(imaging::clahe(img, {8, 8, 2.0}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_Clahe)->Arg(96)->Arg(256)->Arg(512);

static void BM_EnhanceChain(benchmark::State& state) {
  const auto img = sample_image(160, 96);
  const imaging::EnhanceParams params;
  for (auto _ : state) benchmark::DoNotOptimize(imaging::enhance(img, params));
}
BENCHMARK(BM_EnhanceChain);
