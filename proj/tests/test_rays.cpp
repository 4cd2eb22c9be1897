#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "kskit/catalog.hpp"
#include "kskit/rays.hpp"

using kskit::CycNumber;
using kskit::parse_ray;
using kskit::Ray;

namespace {

CycNumber small_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-2, 2);
  CycNumber w = kskit::omega();
  return CycNumber(c(rng)) + CycNumber(c(rng)) * w;
}

Ray random_ray(std::mt19937_64& rng) {
  while (true) {
    kskit::Components comps{small_element(rng), small_element(rng), small_element(rng)};
    if (!comps[0].is_zero() || !comps[1].is_zero() || !comps[2].is_zero()) return Ray(comps);
  }
}

Ray scaled(const Ray& r, const CycNumber& s) {
  const auto& c = r.components();
  return Ray(c[0] * s, c[1] * s, c[2] * s);
}

}  // namespace

TEST_CASE("canonical form is invariant under nonzero scalars") {
  std::mt19937_64 rng(3);
  const CycNumber w = kskit::omega();
  const CycNumber i = CycNumber::root_of_unity(4, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Ray r = random_ray(rng);
    for (const CycNumber& s : {w, w * w, CycNumber(-1), CycNumber(kskit::Rational(3, 2)), i, CycNumber(1) + w * i,
                               small_element(rng) + CycNumber(7)}) {
      Ray t = scaled(r, s);
      CHECK(t == r);
      CHECK(t.to_string() == r.to_string());
    }
  }
}

TEST_CASE("examples of canonical text") {
  CHECK(parse_ray("(w^2,w,1)").to_string() == "(1,ω²,ω)");
  CHECK(parse_ray("(2,2,0)").to_string() == "(1,1,0)");
  CHECK(parse_ray("(0,-3,3w)").to_string() == "(0,1,-ω)");
  CHECK(parse_ray("(ω²,ω,1)").components_string() == "(ω²,ω,1)");
  CHECK(parse_ray("(1,ω,−ω²)") == parse_ray("(1,w,-w^2)"));
  CHECK(parse_ray("(0,1,√2)") == parse_ray("(0,1,r2)"));
  CHECK(parse_ray("(0,1,√2)").conductor() == 8);
  CHECK(parse_ray("(1+w,2,0)") == parse_ray("(-w^2,2,0)"));
  CHECK(parse_ray("(i,1,0)") == parse_ray("(1,-i,0)"));
}

TEST_CASE("malformed ray text is rejected") {
  for (const char* bad : {"", "(1,2)", "(1,2,3,4)", "(0,0,0)", "(1,q,0)", "(1,2,3", "1,2,3)", "(1,w^,0)"}) {
    CAPTURE(bad);
    CHECK_THROWS(parse_ray(bad));
  }
}

TEST_CASE("zero vector is not a ray") { CHECK_THROWS_AS(Ray(0, 0, 0), std::invalid_argument); }

TEST_CASE("rays compare equal across conductors") {
  Ray a = parse_ray("(1,1,0)");
  CHECK(a.coerce(3) == a);
  CHECK(a.coerce(24) == a);
  CHECK(a.coerce(24).to_string() == a.to_string());
  CHECK((a.coerce(12) <=> a) == 0);
}

TEST_CASE("inner product is sesquilinear and Hermitian") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Ray u = random_ray(rng), v = random_ray(rng);
    CycNumber s = small_element(rng);
    if (s.is_zero()) continue;
    CHECK(kskit::inner(v, u) == kskit::inner(u, v).conj());
    CHECK(kskit::inner(v, scaled(u, s)) == s * kskit::inner(v, u));
    CHECK(kskit::inner(scaled(v, s), u) == s.conj() * kskit::inner(v, u));
    CHECK(kskit::is_orthogonal(u, v) == kskit::is_orthogonal(scaled(u, s), v));
    CHECK(u.norm_squared().as_rational().has_value());
    CHECK(*u.norm_squared().as_rational() > 0);
  }
}

TEST_CASE("completing a basis") {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 100; ++trial) {
    Ray u = random_ray(rng), v = random_ray(rng);
    if (!kskit::is_orthogonal(u, v)) {
      if (u != v) CHECK_THROWS_AS(kskit::complete_basis_third(u, v), std::invalid_argument);
      continue;
    }
    ++checked;
    Ray w = kskit::complete_basis_third(u, v);
    CHECK(kskit::is_orthogonal(w, u));
    CHECK(kskit::is_orthogonal(w, v));
    CHECK(kskit::complete_basis_third(v, u) == w);
    CHECK(kskit::complete_basis_third(u, w) == v);
  }
  CHECK(checked > 10);
  CHECK(kskit::complete_basis_third(parse_ray("(1,-w,w^2)"), parse_ray("(1,-1,1)")) == parse_ray("(w^2,-w,1)"));
}

TEST_CASE("basis validation reports the non-orthogonal pairs") {
  auto printed = kskit::new33_x3_as_printed();
  kskit::BasisCheck check = kskit::validate_basis(printed);
  REQUIRE(check.violations.size() == 2);
  std::set<std::string> values;
  for (const auto& v : check.violations) {
    CHECK(kskit::inner(printed[v.first], printed[v.second]) == v.inner_product);
    values.insert(v.inner_product.to_string());
  }
  CHECK(values == std::set<std::string>{"-2", "-2ω"});
  CHECK_THROWS_AS(kskit::Basis{printed}, std::invalid_argument);

  kskit::Basis b(parse_ray("(1,-w,w^2)"), parse_ray("(1,-1,1)"), parse_ray("(w^2,-w,1)"));
  CHECK(b.contains(parse_ray("(-1,1,-1)")));
  CHECK_FALSE(b.contains(parse_ray("(1,1,1)")));
}
