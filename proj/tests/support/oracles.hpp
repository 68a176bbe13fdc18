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

// Brute-force reference implementations. Each one recomputes a library result
// by the most direct route available, sharing no code with the library.

#include "veinforge/evaluation.hpp"
#include "veinforge/forest.hpp"
#include "veinforge/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using veinforge::imaging::GrayImage;

// Global histogram equalization straight from the definition: each pixel
// becomes 255 * (#pixels <= v) / N, rounded half up.
inline GrayImage global_equalize(const GrayImage& img) {
  const auto px = img.pixels();
  GrayImage out(img.width(), img.height());
  for (std::size_t i = 0; i < px.size(); ++i) {
    std::size_t le = 0;
    for (auto q : px) le += q <= px[i] ? 1 : 0;
    const long double v = 255.0L * static_cast<long double>(le) / static_cast<long double>(px.size());
    out.pixels()[i] = static_cast<std::uint8_t>(std::floor(v + 0.5L));
  }
  return out;
}

// Direct 2-D convolution of an outer-product kernel with edge replication.
inline GrayImage convolve2d(const GrayImage& img, const std::vector<double>& k1d) {
  const long r = static_cast<long>(k1d.size() / 2);
  const long w = static_cast<long>(img.width());
  const long h = static_cast<long>(img.height());
  GrayImage out(img.width(), img.height());
  for (long y = 0; y < h; ++y) {
    for (long x = 0; x < w; ++x) {
      long double acc = 0.0L;
      for (long j = -r; j <= r; ++j) {
        for (long i = -r; i <= r; ++i) {
          const long sx = std::clamp(x + i, 0L, w - 1);
          const long sy = std::clamp(y + j, 0L, h - 1);
          acc += static_cast<long double>(k1d[i + r]) * k1d[j + r] * img.at(sx, sy);
        }
      }
      out.at(x, y) = static_cast<std::uint8_t>(std::clamp<long double>(std::floor(acc + 0.5L), 0, 255));
    }
  }
  return out;
}

inline long double gini_counts(const std::map<std::uint32_t, std::size_t>& counts, std::size_t n) {
  long double g = 0.0L;
  for (const auto& [c, k] : counts) {
    const long double q = static_cast<long double>(k) / n;
    g += q * (1.0L - q);
  }
  return g;
}

struct SplitCandidate {
  std::size_t feature;
  double threshold;
  long double weighted;  // n_L/n * G_L + n_R/n * G_R
};

// Every (feature, midpoint) pair scored by partitioning the rows afresh.
inline std::vector<SplitCandidate> enumerate_splits(const veinforge::forest::LabeledMatrix& data,
                                                    const std::vector<std::size_t>& samples,
                                                    const std::vector<std::size_t>& features,
                                                    std::size_t min_leaf = 1) {
  std::vector<SplitCandidate> out;
  for (auto f : features) {
    std::set<float> values;
    for (auto s : samples) values.insert(data.at(s, f));
    for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
      const double lo = *it;
      const double hi = *std::next(it);
      const double t = lo + (hi - lo) / 2.0;
      std::map<std::uint32_t, std::size_t> l;
      std::map<std::uint32_t, std::size_t> r;
      std::size_t nl = 0;
      std::size_t nr = 0;
      for (auto s : samples) {
        if (data.at(s, f) < t) {
          ++l[data.labels[s]];
          ++nl;
        } else {
          ++r[data.labels[s]];
          ++nr;
        }
      }
      if (nl < min_leaf || nr < min_leaf) continue;
      const long double n = static_cast<long double>(samples.size());
      out.push_back({f, t, nl / n * gini_counts(l, nl) + nr / n * gini_counts(r, nr)});
    }
  }
  return out;
}

// AUC as the probability a genuine score beats an imposter score, ties 1/2.
inline double mann_whitney(const veinforge::eval::TrialSet& ts) {
  std::vector<double> g;
  std::vector<double> im;
  for (const auto& t : ts.trials()) (t.is_genuine ? g : im).push_back(t.score);
  long double wins = 0.0L;
  for (double a : g) {
    for (double b : im) wins += a > b ? 1.0L : (a == b ? 0.5L : 0.0L);
  }
  return static_cast<double>(wins / (static_cast<long double>(g.size()) * im.size()));
}

struct Counts {
  std::size_t tp = 0, fn = 0, fp = 0, tn = 0;
};

inline Counts count_at(const veinforge::eval::TrialSet& ts, double t) {
  Counts c;
  for (const auto& tr : ts.trials()) {
    const bool accept = tr.score >= t;
    if (tr.is_genuine) (accept ? c.tp : c.fn)++;
    else (accept ? c.fp : c.tn)++;
  }
  return c;
}

struct EerScan {
  double eer;
  double lower;  // thresholds in (lower, lower + grid] realize the optimum
  bool accept_all;
};

// Confusion counts only change at distinct scores, so the achievable
// (fmr, fnmr) pairs are: accept everything, each distinct score, reject all.
inline EerScan eer_scan(const veinforge::eval::TrialSet& ts) {
  std::set<double> distinct;
  for (const auto& t : ts.trials()) distinct.insert(t.score);
  std::vector<double> cuts(distinct.begin(), distinct.end());
  cuts.push_back(cuts.back() + 1.0);
  double best_gap = std::numeric_limits<double>::infinity();
  EerScan best{0.0, 0.0, true};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Counts c = count_at(ts, cuts[i]);
    const double fmr = static_cast<double>(c.fp) / static_cast<double>(c.fp + c.tn);
    const double fnmr = static_cast<double>(c.fn) / static_cast<double>(c.fn + c.tp);
    const double gap = std::abs(fmr - fnmr);
    if (gap < best_gap) {
      best_gap = gap;
      best = {(fmr + fnmr) / 2.0, i == 0 ? 0.0 : cuts[i - 1], i == 0};
    }
  }
  return best;
}

// Cyclic Jacobi eigenvalue iteration for a symmetric matrix; eigenpairs sorted
// by descending eigenvalue, eigenvectors as rows.
struct Eigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

inline Eigen jacobi(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a[x][x] > a[y][y]; });
  Eigen e;
  for (auto i : order) {
    e.values.push_back(a[i][i]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k][i];
    e.vectors.push_back(col);
  }
  return e;
}

inline std::vector<std::vector<double>> covariance(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t d = rows.front().size();
  std::vector<double> mean(d, 0.0);
  for (const auto& r : rows)
    for (std::size_t j = 0; j < d; ++j) mean[j] += r[j] / static_cast<double>(n);
  std::vector<std::vector<double>> c(d, std::vector<double>(d, 0.0));
  for (const auto& r : rows)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += (r[i] - mean[i]) * (r[j] - mean[j]) / static_cast<double>(n - 1);
  return c;
}

// Mean curvature at an interior pixel by central differences of `f`.
template <typename F>
double mean_curvature_at(const F& f, long x, long y) {
  const double fx = (f(x + 1, y) - f(x - 1, y)) / 2.0;
  const double fy = (f(x, y + 1) - f(x, y - 1)) / 2.0;
  const double fxx = f(x + 1, y) - 2.0 * f(x, y) + f(x - 1, y);
  const double fyy = f(x, y + 1) - 2.0 * f(x, y) + f(x, y - 1);
  const double fxy = (f(x + 1, y + 1) - f(x + 1, y - 1) - f(x - 1, y + 1) + f(x - 1, y - 1)) / 4.0;
  const double g = 1.0 + fx * fx + fy * fy;
  return ((1.0 + fy * fy) * fxx - 2.0 * fx * fy * fxy + (1.0 + fx * fx) * fyy) / (2.0 * std::pow(g, 1.5));
}

}  // namespace oracle
