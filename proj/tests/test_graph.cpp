#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "kskit/catalog.hpp"
#include "kskit/error.hpp"
#include "kskit/graph.hpp"
#include "support/oracles.hpp"

using kskit::SimpleGraph;

namespace {

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph petersen() {
  SimpleGraph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

kskit::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  kskit::Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::set<std::set<std::size_t>> as_sets(const std::vector<std::vector<std::size_t>>& orbits) {
  std::set<std::set<std::size_t>> out;
  for (const auto& o : orbits) out.insert(std::set<std::size_t>(o.begin(), o.end()));
  return out;
}

}  // namespace

TEST_CASE("edge bookkeeping") {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK(g.degree(1) == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  using E = std::pair<std::size_t, std::size_t>;
  CHECK(g.edges() == std::vector<E>{{0, 1}, {2, 3}});
}

TEST_CASE("independence number against subset enumeration on random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::size_t n = 1 + seed % 20;
    double p = 0.1 + 0.8 * static_cast<double>(seed % 7) / 6.0;
    SimpleGraph g = oracle::random_graph(seed, n, p);
    auto res = kskit::independence_number(g);
    CAPTURE(seed);
    CHECK(res.size == oracle::brute_alpha(g));
    CHECK(res.witness.size() == res.size);
    CHECK(kskit::is_independent(g, res.witness));
    CHECK(std::is_sorted(res.witness.begin(), res.witness.end()));
  }
}

TEST_CASE("independence witness is reproducible") {
  SimpleGraph g = oracle::random_graph(123, 40, 0.3);
  auto a = kskit::independence_number(g);
  auto b = kskit::independence_number(g);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("independence number of known graphs") {
  CHECK(kskit::independence_number(cycle(9)).size == 4);
  CHECK(kskit::independence_number(complete(7)).size == 1);
  CHECK(kskit::independence_number(petersen()).size == 4);
  CHECK(kskit::independence_number(SimpleGraph(0)).size == 0);
  CHECK(kskit::independence_number(SimpleGraph(70)).size == 70);
}

TEST_CASE("triangles against triple enumeration") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SimpleGraph g = oracle::random_graph(seed + 1000, 18, 0.35);
    std::vector<kskit::Triangle> expected;
    for (std::size_t i = 0; i < 18; ++i)
      for (std::size_t j = i + 1; j < 18; ++j)
        for (std::size_t k = j + 1; k < 18; ++k)
          if (g.adjacent(i, j) && g.adjacent(j, k) && g.adjacent(i, k)) expected.push_back({i, j, k});
    CHECK(kskit::complete_bases(g) == expected);
  }
}

TEST_CASE("orthogonality graph of the Yu-Oh rays by direct pair checks") {
  auto rays = kskit::yuoh13_rays();
  kskit::OrthoGraph og = kskit::build_graph(rays);
  REQUIRE(og.size() == 13);
  std::size_t edges = 0, triangles = 0;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      edges += kskit::inner(rays[i], rays[j]).is_zero();
      for (std::size_t k = j + 1; k < rays.size(); ++k)
        triangles += kskit::inner(rays[i], rays[j]).is_zero() && kskit::inner(rays[j], rays[k]).is_zero() &&
                     kskit::inner(rays[i], rays[k]).is_zero();
    }
  CHECK(og.graph().edge_count() == edges);
  CHECK(kskit::complete_bases(og.graph()).size() == triangles);
  CHECK(edges == 24);
  CHECK(triangles == 4);
  for (const auto& r : rays) CHECK(og.index_of(r).has_value());
  CHECK_FALSE(og.index_of(kskit::parse_ray("(1,2,3)")).has_value());
}

TEST_CASE("build_graph deduplicates rays") {
  std::vector<kskit::Ray> rays{kskit::parse_ray("(1,0,0)"), kskit::parse_ray("(2,0,0)"), kskit::parse_ray("(0,1,0)")};
  CHECK(kskit::build_graph(rays).size() == 2);
  CHECK_THROWS_AS(kskit::build_graph(std::vector<kskit::Ray>{}), std::invalid_argument);
}

TEST_CASE("automorphisms against all permutations on small graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t n = 2 + seed % 7;
    SimpleGraph g = oracle::random_graph(seed + 500, n, 0.2 + 0.15 * static_cast<double>(seed % 5));
    auto brute = oracle::brute_automorphisms(g);
    auto rep = kskit::automorphisms(g);
    CAPTURE(seed);
    CHECK(rep.order == kskit::Integer(static_cast<unsigned long>(brute.size())));
    std::set<kskit::Permutation> all(brute.begin(), brute.end());
    CHECK(as_sets(rep.orbits) == oracle::orbits_from_elements(n, all));
    for (const auto& gen : rep.generators) CHECK(kskit::is_automorphism(g, gen));
  }
}

TEST_CASE("automorphism groups of known graphs") {
  CHECK(kskit::automorphisms(cycle(12)).order == 24);
  CHECK(kskit::automorphisms(complete(8)).order == 40320);
  CHECK(kskit::automorphisms(petersen()).order == 120);
  CHECK(kskit::automorphisms(SimpleGraph(6)).order == 720);
  CHECK(kskit::automorphisms(petersen()).orbits.size() == 1);
}

TEST_CASE("generators of the new33 group close to 144 elements") {
  auto inst = kskit::builtin("new33");
  auto rep = kskit::automorphisms(inst.graph());
  auto group = oracle::group_closure(inst.size(), rep.generators);
  CHECK(group.size() == 144);
  CHECK(rep.order == 144);
  for (const auto& p : group) CHECK(kskit::is_automorphism(inst.graph(), p));
  CHECK(as_sets(rep.orbits) == oracle::orbits_from_elements(inst.size(), group));
  CHECK(as_sets(kskit::orbits_of(inst.size(), rep.generators)) == as_sets(rep.orbits));
}

TEST_CASE("group order does not depend on vertex labels") {
  std::mt19937_64 rng(99);
  auto inst = kskit::builtin("new33");
  for (int trial = 0; trial < 5; ++trial) {
    auto p = random_permutation(rng, inst.size());
    SimpleGraph h = inst.graph().relabelled(p);
    auto rep = kskit::automorphisms(h);
    CHECK(rep.order == 144);
    CHECK(rep.orbits.size() == 3);
  }
}

TEST_CASE("DIMACS round trip and errors") {
  SimpleGraph g = oracle::random_graph(5, 25, 0.3);
  std::string text = kskit::to_dimacs(g, "random graph\nseed 5");
  CHECK(text.rfind("c random graph\nc seed 5\np edge 25 ", 0) == 0);
  std::istringstream in(text);
  CHECK(kskit::parse_dimacs(in) == g);
  for (const char* bad : {"p edge 3 1\ne 1 4\n", "p edge 3 2\ne 1 2\n", "e 1 2\n", "p edge 3 1\ne 1 x\n",
                          "p edge 3 1\ne 2 2\n"}) {
    std::istringstream b(bad);
    CAPTURE(bad);
    CHECK_THROWS_AS(kskit::parse_dimacs(b), kskit::ParseError);
  }
}
