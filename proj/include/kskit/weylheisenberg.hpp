// Weyl-Heisenberg action on qutrit rays: the shift X and the clock Z.
#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kskit/numfield.hpp"
#include "kskit/rays.hpp"

namespace kskit {

class GeneratorMatrix {
 public:
  using Entries = std::array<std::array<CycNumber, 3>, 3>;

  GeneratorMatrix(std::string label, Entries entries);

  /// X = [[0,0,1],[1,0,0],[0,1,0]]: (a,b,c) -> (c,a,b).
  static GeneratorMatrix shift();
  /// Z = diag(1, ω, ω²).
  static GeneratorMatrix clock();
  /// "X" or "Z"; throws std::invalid_argument otherwise.
  static GeneratorMatrix named(std::string_view label);

  const std::string& label() const noexcept { return label_; }
  const Entries& entries() const noexcept { return entries_; }
  /// Columns pairwise orthogonal with equal norms.
  bool is_unitary() const;

 private:
  std::string label_;
  Entries entries_;
};

/// Canonicalized matrix-vector product.
Ray apply(const GeneratorMatrix& m, const Ray& r);

/// Least superset of `seed` closed under every generator; sorted, distinct.
std::vector<Ray> orbit_closure(std::span<const Ray> seed, std::span<const GeneratorMatrix> gens);

/// Sorted distinct rays.
std::vector<Ray> ray_set(std::span<const Ray> rays);
bool same_ray_set(std::span<const Ray> a, std::span<const Ray> b);

struct SicReport {
  bool is_sic = false;
  std::size_t count = 0;
  /// overlaps[i][j] = |<u_i|u_j>|² / (‖u_i‖²‖u_j‖²) over the distinct input rays.
  std::vector<std::vector<CycNumber>> overlaps;
  std::string reason;  // empty when is_sic
};

/// Nine rays with 4|<u|v>|² = ‖u‖²‖v‖² for every distinct pair (d = 3).
SicReport is_sic_povm(std::span<const Ray> rays);

}  // namespace kskit
