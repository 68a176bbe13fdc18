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

#include "veinforge/pca.hpp"
#include "veinforge/byte_io.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <sstream>

namespace veinforge::features {

namespace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Modified Gram-Schmidt; vectors that collapse are replaced by the next
// standard basis vector that survives orthogonalization.
void orthonormalize(std::vector<Vector>& basis, std::size_t dim) {
  std::size_t next_axis = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (int attempt = 0;; ++attempt) {
      Vector v = basis[i];
      for (std::size_t j = 0; j < i; ++j) v -= basis[j].dot(v) * basis[j];
      for (std::size_t j = 0; j < i; ++j) v -= basis[j].dot(v) * basis[j];
      const double norm = v.norm();
      if (norm > 1e-8) {
        basis[i] = v / norm;
        break;
      }
      if (next_axis >= dim) fail(ErrorCode::DegenerateData, "cannot complete an orthonormal basis");
      basis[i] = Vector::Unit(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(next_axis++));
    }
  }
}

void fix_sign(Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

}  // namespace

PcaModel pca_fit(const std::vector<std::vector<double>>& rows, std::size_t k) {
  const std::size_t n = rows.size();
  if (n < 2) fail(ErrorCode::InvalidParam, "PCA needs at least two samples");
  const std::size_t d = rows.front().size();
  if (d == 0) fail(ErrorCode::InvalidParam, "PCA input dimension is zero");
  for (const auto& r : rows) {
    if (r.size() != d) fail(ErrorCode::DimensionMismatch, "PCA rows differ in dimension");
  }
  if (k < 1 || k > std::min(n - 1, d)) {
    fail(ErrorCode::InvalidParam, "PCA k=" + std::to_string(k) + " outside [1, " + std::to_string(std::min(n - 1, d)) + "]");
  }

  Matrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  const Vector mean = x.colwise().mean().transpose();
  x.rowwise() -= mean.transpose();
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  const double denom = static_cast<double>(n - 1);

  std::vector<Vector> basis;
  std::vector<double> eigenvalues;
  if (d <= n) {
    const Matrix cov = (x.transpose() * x) / denom;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(cov);
    if (solver.info() != Eigen::Success) fail(ErrorCode::DegenerateData, "covariance eigendecomposition failed");
    for (std::size_t c = 0; c < k; ++c) {
      const auto col = static_cast<Eigen::Index>(d - 1 - c);
      basis.push_back(solver.eigenvectors().col(col));
      eigenvalues.push_back(std::max(0.0, solver.eigenvalues()[col]));
    }
  } else {
    const Matrix gram = (x * x.transpose()) / denom;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
    if (solver.info() != Eigen::Success) fail(ErrorCode::DegenerateData, "Gram eigendecomposition failed");
    for (std::size_t c = 0; c < k; ++c) {
      const auto col = static_cast<Eigen::Index>(n - 1 - c);
      const double lambda = std::max(0.0, solver.eigenvalues()[col]);
      eigenvalues.push_back(lambda);
      if (lambda > 1e-12 * scale * scale) {
        basis.push_back(x.transpose() * solver.eigenvectors().col(col) / std::sqrt(lambda * denom));
      } else {
        basis.push_back(Vector::Zero(static_cast<Eigen::Index>(d)));
      }
    }
  }
  if (eigenvalues.front() <= 1e-24 + 1e-14 * scale * scale) {
    fail(ErrorCode::DegenerateData, "training data has no variance");
  }
  orthonormalize(basis, d);

  PcaModel model;
  model.mean.assign(mean.data(), mean.data() + d);
  model.eigenvalues = std::move(eigenvalues);
  for (auto& v : basis) {
    fix_sign(v);
    model.components.emplace_back(v.data(), v.data() + d);
  }
  return model;
}

PcaModel pca_fit(const FeatureSet& vectors, std::size_t k) {
  check_uniform(vectors);
  std::vector<std::vector<double>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.emplace_back(v.values.begin(), v.values.end());
  return pca_fit(rows, k);
}

std::vector<double> pca_project(const PcaModel& model, const std::vector<double>& v) {
  if (v.size() != model.input_dim()) {
    fail(ErrorCode::DimensionMismatch, "vector dimension " + std::to_string(v.size()) + " vs PCA input " +
                                           std::to_string(model.input_dim()));
  }
  std::vector<double> out(model.output_dim(), 0.0);
  for (std::size_t c = 0; c < model.output_dim(); ++c) {
    const auto& comp = model.components[c];
    double acc = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += comp[j] * (v[j] - model.mean[j]);
    out[c] = acc;
  }
  return out;
}

FeatureVector pca_transform(const PcaModel& model, const FeatureVector& v) {
  const auto projected = pca_project(model, std::vector<double>(v.values.begin(), v.values.end()));
  FeatureVector out;
  out.label = v.label;
  out.source_tag = v.source_tag;
  out.values.assign(projected.begin(), projected.end());
  return out;
}

std::vector<double> pca_reconstruct(const PcaModel& model, const std::vector<double>& coeffs) {
  if (coeffs.size() != model.output_dim()) fail(ErrorCode::DimensionMismatch, "coefficient count differs from k");
  std::vector<double> out = model.mean;
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs[c] * model.components[c][j];
  }
  return out;
}

std::string encode_pca(const PcaModel& model) {
  std::ostringstream out;
  out.write("VFPC", 4);
  byte_io::put<std::uint8_t>(out, 1);
  byte_io::put<std::uint32_t>(out, static_cast<std::uint32_t>(model.input_dim()));
  byte_io::put<std::uint32_t>(out, static_cast<std::uint32_t>(model.output_dim()));
  for (double m : model.mean) byte_io::put(out, m);
  for (double e : model.eigenvalues) byte_io::put(out, e);
  for (const auto& c : model.components) {
    for (double v : c) byte_io::put(out, v);
  }
  return out.str();
}

PcaModel decode_pca(const std::string& bytes) {
  std::istringstream in(bytes);
  byte_io::expect_magic(in, "VFPC", "PCA model");
  if (byte_io::get<std::uint8_t>(in, "version") != 1) fail(ErrorCode::FormatError, "unsupported PCA model version");
  const auto d = byte_io::get<std::uint32_t>(in, "dimension");
  const auto k = byte_io::get<std::uint32_t>(in, "component count");
  if (static_cast<std::uint64_t>(d) * (k + 1) * 8 > bytes.size()) fail(ErrorCode::FormatError, "PCA model truncated");
  PcaModel model;
  model.mean.resize(d);
  for (auto& m : model.mean) m = byte_io::get<double>(in, "mean");
  model.eigenvalues.resize(k);
  for (auto& e : model.eigenvalues) e = byte_io::get<double>(in, "eigenvalue");
  model.components.assign(k, std::vector<double>(d));
  for (auto& c : model.components) {
    for (auto& v : c) v = byte_io::get<double>(in, "component");
  }
  byte_io::expect_end(in, "PCA model");
  return model;
}

void save_pca(const std::filesystem::path& path, const PcaModel& model) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  const auto bytes = encode_pca(model);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

PcaModel load_pca(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open PCA model " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return decode_pca(buffer.str());
}

}  // namespace veinforge::features
