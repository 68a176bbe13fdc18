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

#pragma once

#include "veinforge/features.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace veinforge::features {

/// Principal subspace of a training set. Components are orthonormal rows in
/// descending eigenvalue order; each component's first coordinate with
/// magnitude above 1e-12 is positive.
struct PcaModel {
  std::vector<double> mean;
  std::vector<std::vector<double>> components;
  std::vector<double> eigenvalues;  // covariance eigenvalues, (n - 1) denominator

  std::size_t input_dim() const noexcept { return mean.size(); }
  std::size_t output_dim() const noexcept { return components.size(); }
  bool operator==(const PcaModel&) const = default;
};

/// Fits the top-k principal components. Requires n >= 2 samples and
/// 1 <= k <= min(n - 1, dimension). Uses the d x d covariance when d <= n and
/// the n x n Gram matrix otherwise.
PcaModel pca_fit(const std::vector<std::vector<double>>& rows, std::size_t k);
PcaModel pca_fit(const FeatureSet& vectors, std::size_t k);

/// Projections components_i . (v - mean); label and source tag are kept.
FeatureVector pca_transform(const PcaModel& model, const FeatureVector& v);
std::vector<double> pca_project(const PcaModel& model, const std::vector<double>& v);

/// mean + sum_i coeffs_i * components_i
std::vector<double> pca_reconstruct(const PcaModel& model, const std::vector<double>& coeffs);

/// Binary little-endian model file: "VFPC", u8 version 1, u32 input dim,
/// u32 k, f64 mean[d], f64 eigenvalues[k], f64 components[k][d].
std::string encode_pca(const PcaModel& model);
PcaModel decode_pca(const std::string& bytes);
void save_pca(const std::filesystem::path& path, const PcaModel& model);
PcaModel load_pca(const std::filesystem::path& path);

}  // namespace veinforge::features
