#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kskit/catalog.hpp"
#include "kskit/majorana.hpp"

using kskit::parse_ray;
using kskit::SpherePoint;

namespace {

constexpr double kAnchorTol = 1e-12;

bool at(const SpherePoint& p, double x, double y, double z) {
  return std::abs(p.x - x) < kAnchorTol && std::abs(p.y - y) < kAnchorTol && std::abs(p.z - z) < kAnchorTol;
}

// Inverse of the projection: sphere point -> z, or nullopt at the south pole.
std::optional<std::complex<double>> to_plane(const SpherePoint& p) {
  if (p.z < -1 + 1e-12) return std::nullopt;
  return std::complex<double>(p.x, p.y) / (1.0 + p.z);
}

}  // namespace

TEST_CASE("pole anchors") {
  auto n = kskit::majorana_points(parse_ray("(1,0,0)"));
  CHECK(at(n.first, 0, 0, 1));
  CHECK(at(n.second, 0, 0, 1));
  auto m = kskit::majorana_points(parse_ray("(0,1,0)"));
  CHECK(((at(m.first, 0, 0, 1) && at(m.second, 0, 0, -1)) || (at(m.first, 0, 0, -1) && at(m.second, 0, 0, 1))));
  auto s = kskit::majorana_points(parse_ray("(0,0,1)"));
  CHECK(at(s.first, 0, 0, -1));
  CHECK(at(s.second, 0, 0, -1));
}

TEST_CASE("points are roots of the Majorana polynomial") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-3, 3);
  const kskit::CycNumber w = kskit::omega();
  for (int trial = 0; trial < 300; ++trial) {
    kskit::Components comps;
    for (auto& x : comps) x = kskit::CycNumber(c(rng)) + kskit::CycNumber(c(rng)) * w;
    if (comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero()) continue;
    kskit::Ray r(comps);
    auto pts = kskit::majorana_points(r);
    std::complex<double> c0 = r.canonical()[0].evaluate(), c1 = r.canonical()[1].evaluate(),
                         c2 = r.canonical()[2].evaluate();
    std::size_t south = 0;
    for (const auto& p : {pts.first, pts.second}) {
      CHECK(std::abs(p.x * p.x + p.y * p.y + p.z * p.z - 1.0) < 1e-12);
      auto z = to_plane(p);
      if (!z) {
        ++south;
        continue;
      }
      std::complex<double> val = c0 * *z * *z - std::sqrt(2.0) * c1 * *z + c2;
      double scale = std::abs(c0) * std::norm(*z) + std::abs(c1) * std::abs(*z) + std::abs(c2) + 1;
      CHECK(std::abs(val) < 1e-9 * scale);
    }
    // Roots at infinity appear as missing degree.
    std::size_t missing = r.canonical()[0].is_zero() ? (r.canonical()[1].is_zero() ? 2 : 1) : 0;
    CHECK(south >= missing);
  }
}

TEST_CASE("phase invariance") {
  const kskit::CycNumber w = kskit::omega();
  const kskit::CycNumber i = kskit::CycNumber::root_of_unity(4, 1);
  for (const auto& r : kskit::new33_rays()) {
    const auto& c = r.components();
    for (const auto& s : {w, w * w, i, kskit::CycNumber(-5)}) {
      kskit::Ray t(c[0] * s, c[1] * s, c[2] * s);
      CHECK(kskit::same_point_pair(kskit::majorana_points(r), kskit::majorana_points(t), 1e-9));
    }
  }
}

TEST_CASE("orthogonal rays (1,0,0) and (0,0,1) are antipodal") {
  auto a = kskit::majorana_points(parse_ray("(1,0,0)"));
  auto b = kskit::majorana_points(parse_ray("(0,0,1)"));
  CHECK(a.first.distance(b.first) == doctest::Approx(2.0));
}

TEST_CASE("new33 has 33 distinct point pairs") {
  auto rays = kskit::new33_rays();
  std::vector<std::pair<SpherePoint, SpherePoint>> pairs;
  for (const auto& r : rays) pairs.push_back(kskit::majorana_points(r));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) CHECK_FALSE(kskit::same_point_pair(pairs[i], pairs[j], 1e-9));
}

TEST_CASE("CSV export") {
  auto inst = kskit::builtin("new33");
  std::string csv = kskit::majorana_csv(inst);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# majorana convention: ", 0) == 0);
  std::getline(in, line);
  CHECK(line == "ray_index,ray,point,x,y,z");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find("-0.000000000000000") == std::string::npos);
  }
  CHECK(rows == 66);
  CHECK(kskit::majorana_csv(inst) == csv);
}
