// Projective rays in C^3 over a cyclotomic field.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kskit/numfield.hpp"

namespace kskit {

using Components = std::array<CycNumber, 3>;

/// A nonzero vector of C^3 up to a nonzero scalar. Components are kept as
/// given (unnormalized); equality and ordering use the canonical triple,
/// which is the vector divided by its first nonzero component and then
/// rescaled by the positive rational that makes all coefficients coprime
/// integers.
class Ray {
 public:
  /// Throws std::invalid_argument when all components are zero.
  explicit Ray(Components components);
  Ray(const CycNumber& a, const CycNumber& b, const CycNumber& c) : Ray(Components{a, b, c}) {}

  const Components& components() const noexcept { return components_; }
  const Components& canonical() const noexcept { return canonical_; }
  int conductor() const noexcept { return canonical_[0].conductor(); }

  /// <r|r>, a positive rational for the fields used here (real in general).
  CycNumber norm_squared() const;
  /// Same ray with all components embedded in Q(zeta_m).
  Ray coerce(int m) const;

  /// Canonical text, e.g. "(1,ω²,ω)".
  std::string to_string() const;
  /// Text of the stored components, e.g. "(ω²,ω,1)".
  std::string components_string() const;

  friend bool operator==(const Ray& a, const Ray& b);
  friend std::strong_ordering operator<=>(const Ray& a, const Ray& b);

 private:
  Components components_;
  Components canonical_;
};

/// <v|u> = sum_j conj(v_j) u_j on the stored components.
CycNumber inner(const Ray& v, const Ray& u);
/// Hermitian orthogonality; independent of the representatives.
bool is_orthogonal(const Ray& u, const Ray& v);
/// The unique ray orthogonal to both u and v: the conjugated bilinear cross product.
/// Throws std::invalid_argument when u and v are not orthogonal.
Ray complete_basis_third(const Ray& u, const Ray& v);

struct PairViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  CycNumber inner_product;  // <rays[first]|rays[second]>
};

struct BasisCheck {
  std::vector<PairViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

BasisCheck validate_basis(const std::array<Ray, 3>& rays);

/// Three pairwise orthogonal rays; checked on construction.
class Basis {
 public:
  /// Throws std::invalid_argument naming the first non-orthogonal pair.
  explicit Basis(std::array<Ray, 3> rays);
  Basis(Ray a, Ray b, Ray c) : Basis(std::array<Ray, 3>{std::move(a), std::move(b), std::move(c)}) {}

  const std::array<Ray, 3>& rays() const noexcept { return rays_; }
  const Ray& operator[](std::size_t i) const { return rays_[i]; }
  bool contains(const Ray& r) const;
  std::string to_string() const;

 private:
  std::array<Ray, 3> rays_;
};

/// Parses "(1,w,-w^2)", "(1,ω,-ω²)", "(0,1,√2)", "(1+w,2,0)".
/// Recognized atoms: integers, w / ω (cube root of unity), i, √2 / r2.
/// The conductor is the smallest one containing every atom used.
/// Throws std::invalid_argument on malformed input.
Ray parse_ray(std::string_view text);
CycNumber parse_cyc(std::string_view text);

}  // namespace kskit
