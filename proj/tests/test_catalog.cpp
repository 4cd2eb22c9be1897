#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "kskit/catalog.hpp"
#include "kskit/error.hpp"
#include "kskit/weylheisenberg.hpp"

using kskit::parse_ray;

namespace {

// Sets KSKIT_DATA_DIR for one scope.
class DataDirOverride {
 public:
  explicit DataDirOverride(const std::filesystem::path& dir) {
    if (const char* old = std::getenv("KSKIT_DATA_DIR")) old_ = old;
    setenv("KSKIT_DATA_DIR", dir.c_str(), 1);
  }
  ~DataDirOverride() {
    if (old_.empty()) unsetenv("KSKIT_DATA_DIR");
    else setenv("KSKIT_DATA_DIR", old_.c_str(), 1);
  }

 private:
  std::string old_;
};

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("kskit_test_" + name + "_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("labelled bases of new33") {
  const auto& gb = kskit::new33_game_bases();
  REQUIRE(gb.alice.size() == 5);
  REQUIRE(gb.bob.size() == 9);
  for (std::size_t x = 0; x < 5; ++x) CHECK(gb.alice[x].label == "x=" + std::to_string(x));
  for (std::size_t y = 0; y < 9; ++y) CHECK(gb.bob[y].label == "y=" + std::to_string(y));
  for (const auto& lb : gb.alice) CHECK(lb.correction.has_value() == (lb.label == "x=3"));
  for (const auto& lb : gb.bob) CHECK_FALSE(lb.correction.has_value());
  CHECK(gb.alice[3].basis.contains(parse_ray("(w^2,-w,1)")));
  CHECK_FALSE(gb.alice[3].basis.contains(parse_ray("(w^2,w,1)")));
  // The correction is the only completion of the first two vectors.
  CHECK(kskit::complete_basis_third(gb.alice[3].basis[0], gb.alice[3].basis[1]) == parse_ray("(w^2,-w,1)"));
  CHECK(kskit::x3_correction_note().find("(ω²,-ω,1)") != std::string::npos);
}

TEST_CASE("new33 rays and complete bases") {
  auto inst = kskit::builtin("new33");
  CHECK(inst.size() == 33);
  CHECK(inst.bases().size() == 14);
  CHECK(inst.notes().size() == 1);
  // Every labelled basis is a complete basis and vice versa.
  std::vector<kskit::Triangle> labelled;
  auto add = [&](const kskit::LabelledBasis& lb) {
    kskit::Triangle t{*inst.index_of(lb.basis[0]), *inst.index_of(lb.basis[1]), *inst.index_of(lb.basis[2])};
    std::sort(t.begin(), t.end());
    labelled.push_back(t);
  };
  for (const auto& lb : kskit::new33_game_bases().alice) add(lb);
  for (const auto& lb : kskit::new33_game_bases().bob) add(lb);
  std::sort(labelled.begin(), labelled.end());
  CHECK(labelled == inst.bases());
}

TEST_CASE("Yu-Oh rays sit inside new33") {
  auto yo = kskit::yuoh13_rays();
  auto big = kskit::builtin("new33");
  CHECK(yo.size() == 13);
  for (const auto& r : yo) CHECK(big.index_of(r).has_value());
  auto h = kskit::yuoh_h_rays();
  CHECK(h.size() == 4);
  for (const auto& r : h) CHECK(std::find(yo.begin(), yo.end(), r) != yo.end());
  // The h-rays are pairwise non-orthogonal and lie in no complete basis of yuoh13.
  auto inst = kskit::builtin("yuoh13");
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) CHECK_FALSE(kskit::is_orthogonal(h[i], h[j]));
  for (const auto& t : inst.bases())
    for (auto v : t)
      for (const auto& r : h) CHECK(inst.rays()[v] != r);
}

TEST_CASE("unknown and missing sets") {
  CHECK_THROWS_AS(kskit::builtin("nope"), kskit::UnknownSet);
  CHECK_THROWS_AS(kskit::resolve_set("/definitely/not/here.json"), kskit::UnknownSet);
  auto empty = scratch_dir("empty");
  DataDirOverride guard(empty);
  CHECK(kskit::data_dir() == empty);
  CHECK_THROWS_AS(kskit::builtin("peres33"), kskit::DataUnavailable);
  CHECK_THROWS_AS(kskit::builtin("penrose33"), kskit::DataUnavailable);
  CHECK(kskit::builtin("new33").size() == 33);
  std::filesystem::remove_all(empty);
}

TEST_CASE("shipped legacy data files") {
  struct Row {
    const char* name;
    std::size_t rays, bases;
  };
  for (Row row : {Row{"peres33", 33, 16}, Row{"conway31", 31, 17}, Row{"schuette33", 33, 20}}) {
    CAPTURE(row.name);
    auto inst = kskit::builtin(row.name);
    CHECK(inst.name() == row.name);
    CHECK(inst.size() == row.rays);
    CHECK(inst.bases().size() == row.bases);
    CHECK_FALSE(inst.provenance().empty());
  }
  CHECK_THROWS_AS(kskit::builtin("penrose33"), kskit::DataUnavailable);
}

TEST_CASE("data file round trip") {
  for (const char* name : {"new33", "peres33", "yuoh13"}) {
    auto inst = kskit::builtin(name);
    std::string text = kskit::serialize_vector_set(kskit::to_vector_set(inst, 24));
    auto loaded = kskit::load_set_text(text);
    CHECK(loaded.issues.empty());
    CHECK(loaded.instance.rays() == inst.rays());
    CHECK(loaded.instance.bases() == inst.bases());
    CHECK(loaded.instance.name() == inst.name());
    CHECK(kskit::serialize_vector_set(kskit::to_vector_set(loaded.instance, 24)) == text);
  }
}

TEST_CASE("loading from a file and by path") {
  auto dir = scratch_dir("file");
  auto path = dir / "set.json";
  {
    std::ofstream out(path);
    out << kskit::serialize_vector_set(kskit::to_vector_set(kskit::builtin("yuoh13"), 3));
  }
  CHECK(kskit::load_set(path).instance.size() == 13);
  CHECK(kskit::resolve_set(path.string()).size() == 13);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed data files") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"name":"a","conductor":1})",
      R"({"name":"a","conductor":0,"rays":[[[[0,1,1]],[],[]]]})",
      R"({"name":"a","conductor":1,"rays":[]})",
      R"({"name":"a","conductor":1,"rays":[[[],[],[]]]})",
      R"({"name":"a","conductor":1,"rays":[[[[0,1,1]],[]]]})",
      R"({"name":"a","conductor":1,"rays":[[[[0,1,0]],[],[]]]})",
      R"({"name":"a","conductor":1,"rays":[[[[0,"x",1]],[],[]]]})",
      R"({"name":"a","conductor":1,"rays":[[[[0,1,1]],[],[]]],"declared_bases":[[0,1,2]]})",
      R"({"name":"a","conductor":1,"rays":[[[[0,1,1]],[],[]],[[[0,2,1]],[],[]]]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(kskit::load_set_text(text), kskit::ParseError);
  }
}

TEST_CASE("big integers as strings") {
  auto loaded = kskit::load_set_text(
      R"({"name":"a","conductor":1,"rays":[[[[0,"123456789012345678901234567890",1]],[[0,1,"3"]],[]]]})");
  CHECK(loaded.instance.size() == 1);
}

TEST_CASE("non-orthogonal declared bases are reported, not thrown") {
  const char* text = R"({"name":"a","conductor":1,
    "rays":[[[[0,1,1]],[],[]], [[],[[0,1,1]],[]], [[[0,1,1]],[[0,1,1]],[]], [[],[],[[0,1,1]]]],
    "declared_bases":[[0,1,3],[0,2,3]]})";
  auto loaded = kskit::load_set_text(text);
  REQUIRE(loaded.issues.size() == 1);
  CHECK(loaded.issues[0].index == 1);
  CHECK(loaded.issues[0].check.violations.size() == 1);
  CHECK(loaded.instance.bases().size() == 1);
}

TEST_CASE("a data file with bad declared bases is not accepted as a builtin") {
  auto dir = scratch_dir("badbases");
  {
    std::ofstream out(dir / "peres33.json");
    out << R"({"name":"peres33","conductor":1,"rays":[[[[0,1,1]],[],[]],[[[0,1,1]],[[0,1,1]],[]],[[],[],[[0,1,1]]]],
              "declared_bases":[[0,1,2]]})";
  }
  DataDirOverride guard(dir);
  CHECK_THROWS_AS(kskit::builtin("peres33"), kskit::ParseError);
  std::filesystem::remove_all(dir);
}
