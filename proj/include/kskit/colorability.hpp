// KS colourability: 0/1 assignments with at most one 1 on every orthogonal
// pair and exactly one 1 on every complete basis.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kskit/graph.hpp"
#include "kskit/rays.hpp"

namespace kskit {

/// A named ray set with its orthogonality graph and complete bases.
/// Ray indices everywhere refer to graph().vertices().
class KSInstance {
 public:
  KSInstance() = default;
  /// Throws std::invalid_argument on an empty ray list.
  KSInstance(std::string name, std::span<const Ray> rays, std::string provenance = {},
             std::vector<std::string> notes = {});

  const std::string& name() const noexcept { return name_; }
  const std::string& provenance() const noexcept { return provenance_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  const OrthoGraph& ortho() const noexcept { return graph_; }
  const SimpleGraph& graph() const noexcept { return graph_.graph(); }
  const std::vector<Ray>& rays() const noexcept { return graph_.vertices(); }
  std::size_t size() const noexcept { return graph_.size(); }
  /// Exactly the 3-cliques of graph().
  const std::vector<Triangle>& bases() const noexcept { return bases_; }
  std::optional<std::size_t> index_of(const Ray& r) const { return graph_.index_of(r); }

 private:
  std::string name_;
  std::string provenance_;
  std::vector<std::string> notes_;
  OrthoGraph graph_;
  std::vector<Triangle> bases_;
};

/// values[i] is f(rays()[i]).
struct Assignment {
  std::vector<std::uint8_t> values;
  std::size_t ones() const;
};

struct EdgeViolation {
  std::size_t u = 0;
  std::size_t v = 0;
};
struct BasisViolation {
  Triangle basis{};
  std::size_t sum = 0;
};
struct AssignmentViolation {
  std::variant<EdgeViolation, BasisViolation> what;
  std::string describe(const KSInstance& inst) const;
};

/// nullopt when f satisfies every edge and basis constraint; otherwise the
/// first violated constraint (edges before bases, lexicographic).
/// Throws std::invalid_argument when f is not total on the instance.
std::optional<AssignmentViolation> verify_assignment(const KSInstance& inst, const Assignment& f);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t conflicts = 0;
};

struct ColoringResult {
  std::optional<Assignment> assignment;  // set iff a KS assignment exists
  SearchStats stats;
  bool colorable() const noexcept { return assignment.has_value(); }
};

/// Exhaustive backtracking over complete bases (which ray carries the 1)
/// with unit propagation. Rays outside every basis end up 0.
ColoringResult find_ks_assignment(const KSInstance& inst);

struct Enumeration {
  std::vector<Assignment> assignments;
  bool truncated = false;  // more assignments exist beyond the cap
  SearchStats stats;
};

/// Every KS assignment, in a deterministic order, up to `cap` of them.
Enumeration enumerate_ks_assignments(const KSInstance& inst, std::size_t cap);

/// DIMACS CNF of the constraint system; variable i+1 means ray i is assigned 1.
std::string to_cnf(const KSInstance& inst);

}  // namespace kskit
