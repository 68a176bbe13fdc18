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
#include "veinforge/rng.hpp"

#include <benchmark/benchmark.h>

using namespace veinforge;

// Gaussian blobs, one mean per class.
static features::FeatureSet blobs(std::size_t n, std::size_t d, std::size_t classes) {
  SplitMix64 rng(3);
  features::FeatureSet set;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = i % classes;
    features::FeatureVector v{{}, "c" + std::to_string(k), ""};
    for (std::size_t j = 0; j < d; ++j) v.values.push_back(static_cast<float>(rng.normal() + (j % classes == k ? 1.5 : 0.0)));
    set.push_back(std::move(v));
  }
  return set;
}

static void BM_TrainForest(benchmark::State& state) {
  const auto data = blobs(140, static_cast<std::size_t>(state.range(0)), 20);
  forest::ForestParams p;
  p.n_trees = 100;
  for (auto _ : state) benchmark::DoNotOptimize(forest::train_forest(data, p));
}
BENCHMARK(BM_TrainForest)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_Predict(benchmark::State& state) {
  const auto data = blobs(140, 1024, 20);
  forest::ForestParams p;
  p.n_trees = 100;
  const auto model = forest::train_forest(data, p);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(model.predict(data[i++ % data.size()]));
}
BENCHMARK(BM_Predict);
