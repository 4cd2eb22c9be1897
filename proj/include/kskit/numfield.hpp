// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycNumber is stored as rational coefficients on the power basis
// 1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th cyclotomic
// polynomial. The reduced list is unique, so equality is structural.
// Operands with different conductors are coerced to the lcm.
#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kskit {

using Rational = mpq_class;
using Integer = mpz_class;

/// One term of the textual CycNumber form: (numerator/denominator) * zeta^power.
struct CycTerm {
  std::int64_t power = 0;
  Integer numerator = 0;
  Integer denominator = 1;
};

class CycNumber {
 public:
  /// Zero in Q.
  CycNumber();
  /// Integer constant in Q.
  CycNumber(long value);  // NOLINT(google-explicit-constructor)
  CycNumber(const Rational& value);  // NOLINT(google-explicit-constructor)

  static CycNumber zero(int conductor);
  static CycNumber rational(int conductor, const Rational& value);
  /// zeta_n^power; negative powers are allowed.
  static CycNumber root_of_unity(int conductor, std::int64_t power);
  static CycNumber from_terms(int conductor, std::span<const CycTerm> terms);
  /// sqrt(2) = zeta_8 + zeta_8^-1, embedded in Q(zeta_n); n must be a multiple of 8.
  static CycNumber sqrt2(int conductor);

  int conductor() const noexcept { return conductor_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;
  /// True when the element is fixed by complex conjugation.
  bool is_real() const;

  CycNumber conj() const;
  /// Throws std::domain_error on zero.
  CycNumber inverse() const;

  /// Embeds into Q(zeta_m); m must be a multiple of the conductor.
  CycNumber coerce(int m) const;
  /// Inverse of coerce when the element lies in Q(zeta_m).
  std::optional<CycNumber> restrict_to(int m) const;

  std::complex<double> evaluate() const;

  /// Reduced coefficients as (power, num, den) triples, zero terms omitted.
  std::vector<CycTerm> terms() const;
  /// Readable form: "ω²", "-2", "1+ω", "√2", "ζ8^3". Unicode output.
  std::string to_string() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator*=(const Rational& rhs);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

  /// Field equality; mixed conductors are compared in the lcm field.
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  /// Total order: conductor first, then coefficients lexicographically.
  friend std::strong_ordering operator<=>(const CycNumber& a, const CycNumber& b);

 private:
  CycNumber(int conductor, std::vector<Rational> coeffs);

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Euler phi.
int euler_phi(int n);
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int n);
/// Rendering of a rational: "3", "-1/2".
std::string rational_to_string(const Rational& q);

/// The primitive cube root of unity exp(2 pi i / 3).
inline CycNumber omega() { return CycNumber::root_of_unity(3, 1); }

}  // namespace kskit
