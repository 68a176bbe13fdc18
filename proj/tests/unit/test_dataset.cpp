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

#include "veinforge/dataset.hpp"
#include "veinforge/error.hpp"
#include "veinforge/pgm.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

using namespace veinforge;
using namespace veinforge::dataset;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

void touch(const std::filesystem::path& p) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream(p) << "x";
}

Manifest grid_manifest(std::size_t subjects, std::size_t fingers, std::size_t images) {
  Manifest m;
  for (std::size_t s = 0; s < subjects; ++s) {
    for (std::size_t f = 0; f < fingers; ++f) {
      for (std::size_t i = 0; i < images; ++i) {
        m.records.push_back({"img/" + std::to_string(s) + "_" + std::to_string(f) + "_" + std::to_string(i) + ".pgm",
                             std::to_string(s), std::to_string(f), 1, static_cast<int>(i + 1)});
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("manifest parsing") {
  const char* text =
      "#dataset=demo\n"
      "#expected.total=3\n"
      "image_path,subject_id,finger_id,session,sample_index\n"
      "a/1.pgm,001,1,1,1\n"
      "a/2.pgm,001,1,1,2\n"
      "b/1.pgm,002,3,2,1\n";
  const Manifest m = parse_manifest(text, "/data");
  REQUIRE(m.records.size() == 3);
  CHECK(m.dataset_name == "demo");
  CHECK(m.expected.total == 3u);
  CHECK(m.records[2].class_id() == "002:3");
  CHECK(m.records[2].session == 2);
  CHECK(m.resolve(m.records[0]) == std::filesystem::path("/data/a/1.pgm"));
  CHECK(m.classes() == std::vector<std::string>{"001:1", "002:3"});
}

TEST_CASE("manifest columns may come in any order") {
  const Manifest m = parse_manifest("sample_index,session,finger_id,subject_id,image_path\n4,2,r,s9,x.pgm\n");
  REQUIRE(m.records.size() == 1);
  CHECK(m.records[0] == SampleRecord{"x.pgm", "s9", "r", 2, 4});
}

TEST_CASE("manifest errors") {
  const std::string header = "image_path,subject_id,finger_id,session,sample_index\n";
  CHECK(code_of([&] { parse_manifest(header + "a.pgm,1,1,1,1\nb.pgm,1,1,1,1\n"); }) == ErrorCode::DuplicateRecord);
  CHECK(code_of([] { parse_manifest("image_path,subject_id,session,sample_index\na,1,1,1\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { parse_manifest(header + "a.pgm,1,1,x,1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_manifest(header + "a.pgm,1,1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_manifest("#only a comment\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load_manifest("/nonexistent/manifest.csv"); }) == ErrorCode::FileNotFound);
}

TEST_CASE("manifest text round trip") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    Manifest m = grid_manifest(1 + rng.below(4), 1 + rng.below(3), 1 + rng.below(4));
    m.dataset_name = "set" + std::to_string(trial);
    if (rng.below(2)) m.expected.total = m.records.size();
    if (rng.below(2)) m.expected.width = 640;
    const Manifest back = parse_manifest(format_manifest(m));
    CHECK(back.records == m.records);
    CHECK(back.expected == m.expected);
    CHECK(back.dataset_name == m.dataset_name);
  }
}

TEST_CASE("flat layout") {
  fixture::TempDir dir("flat");
  touch(dir / "c1/a.pgm");
  touch(dir / "c1/b.pgm");
  touch(dir / "c2/a.pgm");
  touch(dir / "c2/b.png");
  touch(dir / "c2/notes.txt");
  const Manifest m = generate_manifest(dir.path(), Layout::Flat);
  CHECK(m.records.size() == 4);
  CHECK(m.classes().size() == 2);
  CHECK(m.records[0].image_path == "c1/a.pgm");
  CHECK(m.records[0].class_id() == "c1:0");
}

TEST_CASE("fv-usm layout at full database size") {
  fixture::TempDir dir("fvusm");
  for (int s = 1; s <= 123; ++s) {
    for (int f = 1; f <= 4; ++f) {
      char name[32];
      std::snprintf(name, sizeof name, "vein%03d_%d", s, f);
      for (int i = 1; i <= 6; ++i) touch(dir.path() / name / ("0" + std::to_string(i) + ".jpg"));
    }
  }
  Manifest m = generate_manifest(dir.path(), Layout::FvUsm);
  CHECK(m.records.size() == 2952);
  CHECK(m.classes().size() == 492);
  CHECK(m.records.front().subject_id == "vein001");
  CHECK(m.records.front().finger_id == "1");
  m.expected = {123, 4, 6, 2952, std::nullopt, std::nullopt};
  CHECK(validate_manifest(m).passed());
}

TEST_CASE("utfvp and plusvein-fv3 layouts") {
  fixture::TempDir dir("utfvp");
  touch(dir / "0001/0001_1_1_120509-135315.png");
  touch(dir / "0001/0001_1_2_120509-135338.png");
  touch(dir / "0002/0002_3_1_120509-135315.png");
  const Manifest u = generate_manifest(dir.path(), Layout::Utfvp);
  REQUIRE(u.records.size() == 3);
  CHECK(u.records[1].class_id() == "0001:1");
  CHECK(u.records[1].sample_index == 2);

  fixture::TempDir pv("plusvein");
  touch(pv / "PLUS-FV3-Laser/001_2_3_4.png");
  touch(pv / "PLUS-FV3-Laser/001_2_1_1.png");
  const Manifest p = generate_manifest(pv.path(), Layout::PlusveinFv3);
  REQUIRE(p.records.size() == 2);
  CHECK(p.records[0].session == 1);
  CHECK(p.records[1].session == 3);
  CHECK(p.records[1].sample_index == 4);
}

TEST_CASE("layout errors") {
  fixture::TempDir dir("empty");
  CHECK(code_of([&] { generate_manifest(dir.path(), Layout::Flat); }) == ErrorCode::LayoutMismatch);
  CHECK(code_of([&] { generate_manifest(dir / "missing", Layout::Flat); }) == ErrorCode::LayoutMismatch);
  CHECK(code_of([] { parse_layout("sdumla"); }) == ErrorCode::InvalidParam);
  for (auto l : {Layout::FvUsm, Layout::Utfvp, Layout::PlusveinFv3, Layout::Flat}) CHECK(parse_layout(to_string(l)) == l);
}

TEST_CASE("validation against declared totals") {
  SUBCASE("nothing declared") {
    const auto r = validate_manifest(grid_manifest(2, 2, 2));
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].status == CheckStatus::Skipped);
    CHECK(r.passed());
  }
  SUBCASE("utfvp totals: the declared total wins over an inconsistent per-finger count") {
    Manifest m = grid_manifest(60, 6, 4);
    REQUIRE(m.records.size() == 1440);
    m.expected = {60, 6, 6, 1440, std::nullopt, std::nullopt};
    const auto r = validate_manifest(m);
    CHECK(r.passed());
    CHECK(r.find("declared_arithmetic")->status == CheckStatus::Skipped);
    CHECK(r.find("images_per_class")->status == CheckStatus::Pass);
    m.expected.images_per_finger.reset();
    CHECK(validate_manifest(m).passed());
  }
  SUBCASE("a missing image fails the per-class count and names the class") {
    Manifest m = grid_manifest(3, 2, 5);
    m.expected = {3, 2, 5, 30, std::nullopt, std::nullopt};
    m.records.erase(m.records.begin() + 7);  // subject 0, finger 1
    const auto r = validate_manifest(m);
    CHECK_FALSE(r.passed());
    const auto* c = r.find("images_per_class");
    REQUIRE(c);
    CHECK(c->status == CheckStatus::Fail);
    CHECK(c->detail.find("0:1") != std::string::npos);
    CHECK(r.find("total_records")->status == CheckStatus::Fail);
  }
  SUBCASE("dimension check opens sampled images") {
    fixture::TempDir dir("dims");
    Manifest m;
    m.base_dir = dir.path();
    for (int i = 0; i < 4; ++i) {
      const std::string name = std::to_string(i) + ".pgm";
      imaging::write_pgm(dir / name, imaging::GrayImage(i == 3 ? 9 : 8, 6));
      m.records.push_back({name, "s", "f", 1, i});
    }
    m.expected.width = 8;
    m.expected.height = 6;
    CHECK(validate_manifest(m, 3).passed());
    CHECK_FALSE(validate_manifest(m, 4).passed());
    const std::string lines = validate_manifest(m, 4).to_json_lines();
    CHECK(lines.find("\"status\":\"fail\"") != std::string::npos);
  }
}

TEST_CASE("split sizes use the ceiling of the train fraction") {
  const Manifest m = grid_manifest(1, 1, 6);
  const auto idx = split_indices(m, {0.67, 42});
  CHECK(idx.train.size() == 5);
  CHECK(idx.test.size() == 1);
  CHECK(split_indices(grid_manifest(1, 1, 10), {0.7, 1}).train.size() == 7);
  CHECK(split_indices(grid_manifest(1, 1, 10), {0.67, 1}).train.size() == 7);
}

TEST_CASE("split is deterministic and disjoint") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Manifest m = grid_manifest(1 + rng.below(5), 1 + rng.below(3), 3 + rng.below(8));
    const SplitSpec spec{0.3 + 0.3 * rng.uniform(), rng.next()};
    const auto a = split_indices(m, spec);
    const auto b = split_indices(m, spec);
    CHECK(a.train == b.train);
    CHECK(a.test == b.test);
    std::set<std::size_t> train(a.train.begin(), a.train.end());
    std::set<std::size_t> test(a.test.begin(), a.test.end());
    std::vector<std::size_t> common;
    std::set_intersection(train.begin(), train.end(), test.begin(), test.end(), std::back_inserter(common));
    CHECK(common.empty());
    CHECK(train.size() + test.size() == m.records.size());
    // Every class lands in both halves.
    std::set<std::string> train_classes;
    std::set<std::string> test_classes;
    for (auto i : a.train) train_classes.insert(m.records[i].class_id());
    for (auto i : a.test) test_classes.insert(m.records[i].class_id());
    CHECK(train_classes == test_classes);
  }
}

TEST_CASE("split ignores record order within the manifest") {
  Manifest m = grid_manifest(3, 1, 8);
  const auto [train_a, test_a] = split(m, {0.5, 9});
  std::reverse(m.records.begin(), m.records.end());
  const auto [train_b, test_b] = split(m, {0.5, 9});
  std::set<std::string> ka;
  std::set<std::string> kb;
  for (const auto& r : train_a.records) ka.insert(r.key());
  for (const auto& r : train_b.records) kb.insert(r.key());
  CHECK(ka == kb);
}

TEST_CASE("split errors") {
  CHECK(code_of([] { split_indices(grid_manifest(2, 1, 1), {0.67, 1}); }) == ErrorCode::UnsplittableClass);
  CHECK(code_of([] { split_indices(grid_manifest(1, 1, 2), {0.99, 1}); }) == ErrorCode::UnsplittableClass);
  CHECK(code_of([] { split_indices(grid_manifest(1, 1, 4), {1.0, 1}); }) == ErrorCode::InvalidParam);
}

TEST_CASE("split file round trip") {
  const Manifest m = grid_manifest(3, 2, 4);
  const SplitSpec spec{0.67, 5};
  const SplitFile sf = SplitFile::from(m, spec, split_indices(m, spec));
  CHECK(decode_split_file(encode_split_file(sf)) == sf);
  CHECK(encode_split_file(sf) == encode_split_file(SplitFile::from(m, spec, split_indices(m, spec))));
  CHECK(sf.train.front().second == m.records[sf.train.front().first].key());
  CHECK(code_of([] { decode_split_file("{\"schema\":\"other\"}"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { decode_split_file("not json"); }) == ErrorCode::FormatError);
}
