// Orthogonality graphs and the exact searches run on them: triangle
// (complete basis) enumeration, maximum independent set, and the
// automorphism group with its vertex orbits.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kskit/bitset.hpp"
#include "kskit/numfield.hpp"
#include "kskit/rays.hpp"

namespace kskit {

/// perm[i] is the image of vertex i.
using Permutation = std::vector<std::size_t>;
using Triangle = std::array<std::size_t, 3>;

/// Undirected simple graph with bitset adjacency rows.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t order = 0);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// Graph with vertex v relabelled perm[v].
  SimpleGraph relabelled(const Permutation& perm) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<Bitset> rows_;
  std::size_t edges_ = 0;
};

/// Vertices are distinct rays in canonical order; edge iff orthogonal.
class OrthoGraph {
 public:
  OrthoGraph() = default;
  OrthoGraph(std::vector<Ray> vertices, SimpleGraph graph);

  const std::vector<Ray>& vertices() const noexcept { return vertices_; }
  const SimpleGraph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::optional<std::size_t> index_of(const Ray& r) const;

 private:
  std::vector<Ray> vertices_;
  SimpleGraph graph_;
};

/// Deduplicates (as rays), sorts canonically and computes exact adjacency.
/// Throws std::invalid_argument on empty input.
OrthoGraph build_graph(std::span<const Ray> rays);

/// All 3-cliques (i < j < k), lexicographic.
std::vector<Triangle> complete_bases(const SimpleGraph& g);

struct IndependentSet {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // sorted vertex indices
  std::uint64_t nodes = 0;           // branch-and-bound nodes expanded
};

/// Exact maximum independent set by bitset branch and bound (max clique in
/// the complement with greedy colouring bounds). The witness is the first
/// optimum met in the fixed branching order, so it is reproducible.
IndependentSet independence_number(const SimpleGraph& g);
bool is_independent(const SimpleGraph& g, std::span<const std::size_t> vertices);

struct AutGroupReport {
  Integer order = 1;
  std::vector<Permutation> generators;
  /// Orbits sorted internally and by smallest member.
  std::vector<std::vector<std::size_t>> orbits;
  std::uint64_t search_nodes = 0;
};

/// Automorphism group by individualization-refinement over equitable partitions.
AutGroupReport automorphisms(const SimpleGraph& g);
bool is_automorphism(const SimpleGraph& g, const Permutation& perm);
/// Orbit partition of the group generated by `generators` (union-find closure).
std::vector<std::vector<std::size_t>> orbits_of(std::size_t n, std::span<const Permutation> generators);

/// "p edge V E" followed by "e i j" lines, 1-based. Comment lines start with "c ".
std::string to_dimacs(const SimpleGraph& g, std::string_view comment = {});
/// Throws ParseError.
SimpleGraph parse_dimacs(std::istream& in);

}  // namespace kskit
