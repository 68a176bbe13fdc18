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

#include "fixtures.hpp"
#include "oracles.hpp"

#include "veinforge/clahe.hpp"
#include "veinforge/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace veinforge;
using namespace veinforge::imaging;

TEST_CASE("clip_histogram leaves a histogram under the limit alone") {
  Histogram h;
  for (std::size_t i = 0; i < 256; i += 3) h.add(i, i % 5);
  CHECK(clip_histogram(h, 4) == h);
}

TEST_CASE("clip_histogram spreads the excess from bin 0 upwards") {
  Histogram h;
  h.add(0, 10);
  const Histogram c = clip_histogram(h, 4);
  CHECK(c[0] == 5);
  for (std::size_t i = 1; i <= 5; ++i) CHECK(c[i] == 1);
  for (std::size_t i = 6; i < 256; ++i) CHECK(c[i] == 0);
  CHECK(c.total() == 10);

  Histogram big;
  big.add(7, 1000);
  const Histogram d = clip_histogram(big, 100);
  // 900 excess: 3 per bin plus a remainder of 132 for bins 0..131.
  CHECK(d[7] == 104);
  CHECK(d[0] == 4);
  CHECK(d[131] == 4);
  CHECK(d[132] == 3);
  CHECK(d.total() == 1000);
}

TEST_CASE("clip_histogram conserves mass") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Histogram h;
    const auto occupied = 1 + rng.below(256);
    for (std::uint64_t i = 0; i < occupied; ++i) h.add(rng.below(256), rng.below(500));
    if (h.total() == 0) h.add(0);
    const auto limit = static_cast<std::int64_t>(1 + rng.below(300));
    CHECK(clip_histogram(h, limit).total() == h.total());
  }
  CHECK_THROWS_AS(clip_histogram(Histogram{}, 0), Error);
}

TEST_CASE("equalize_lut hand cases") {
  Histogram zero;
  zero.add(0, 17);
  const TileLut a = equalize_lut(zero);
  CHECK(std::all_of(a.begin(), a.end(), [](auto v) { return v == 255; }));

  Histogram flat;
  for (std::size_t i = 0; i < 256; ++i) flat.add(i, 3);
  const TileLut b = equalize_lut(flat);
  for (std::size_t v = 0; v < 256; ++v) {
    CHECK(b[v] == static_cast<int>(std::floor(255.0 * (v + 1) / 256.0 + 0.5)));
  }

  Histogram ends;
  ends.add(0, 8);
  ends.add(255, 8);
  const TileLut c = equalize_lut(ends);
  for (std::size_t v = 0; v < 255; ++v) CHECK(c[v] == 128);
  CHECK(c[255] == 255);

  CHECK_THROWS_AS(equalize_lut(Histogram{}), Error);
}

TEST_CASE("equalize_lut matches a running CDF oracle") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Histogram h;
    for (int i = 0; i < 40; ++i) h.add(rng.below(256), 1 + rng.below(9));
    const TileLut lut = equalize_lut(h);
    long double cdf = 0.0L;
    for (std::size_t v = 0; v < 256; ++v) {
      cdf += h[v];
      CHECK(lut[v] == static_cast<int>(std::floor(255.0L * cdf / h.total() + 0.5L)));
    }
  }
}

TEST_CASE("clahe of a constant image is constant") {
  SplitMix64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = static_cast<std::uint8_t>(rng.below(256));
    const GrayImage img(8 + rng.below(40), 8 + rng.below(40), v);
    const ClaheParams p{1 + rng.below(8), 1 + rng.below(8), 0.5 + 4.0 * rng.uniform()};
    const GrayImage out = clahe(img, p);
    const auto first = out.pixels()[0];
    CHECK(std::all_of(out.pixels().begin(), out.pixels().end(), [&](auto q) { return q == first; }));
  }
}

TEST_CASE("single-tile unclipped clahe is global equalization") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const GrayImage img = fixture::random_image(rng, 1 + rng.below(32), 1 + rng.below(32), 2 + rng.below(255));
    CHECK(clahe(img, {1, 1, 256.0}) == oracle::global_equalize(img));
  }
}

TEST_CASE("2x2 clahe on random 16x16 images stays non-constant") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const GrayImage img = fixture::random_image(rng, 16, 16);
    const GrayImage out = clahe(img, {2, 2, 2.0});
    const auto [lo, hi] = std::minmax_element(out.pixels().begin(), out.pixels().end());
    CHECK(*lo < *hi);
  }
}

TEST_CASE("uneven grids mirror the image into equal tiles") {
  // Width 3 in two tiles of width 2: the second tile sees pixels 2 and 1.
  const GrayImage img(3, 1, std::vector<std::uint8_t>{0, 100, 200});
  const GrayImage out = clahe(img, {2, 1, 256.0});
  CHECK(out.pixels()[0] == 128);
  CHECK(out.pixels()[1] == 223);  // 255 blended a quarter of the way toward 128
  CHECK(out.pixels()[2] == 255);
}

TEST_CASE("clahe parameter validation") {
  const GrayImage img(10, 10, 5);
  CHECK_THROWS_AS(clahe(img, {0, 2, 2.0}), Error);
  CHECK_THROWS_AS(clahe(img, {2, 2, 0.0}), Error);
  CHECK_THROWS_AS(clahe(img, {11, 2, 2.0}), Error);
  CHECK(absolute_clip_limit(2.0, 1024) == 8);
  CHECK(absolute_clip_limit(0.01, 10) == 1);
}
