#include "kskit/rays.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace kskit {
namespace {

// Rewrites the components over the smallest Q(zeta_d), d | conductor, that holds all three.
Components restrict_to_smallest_field(const Components& v) {
  int n = 1;
  for (const auto& c : v) n = std::max(n, c.conductor());
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    Components out;
    bool ok = true;
    for (std::size_t j = 0; j < 3 && ok; ++j) {
      auto r = v[j].restrict_to(d);
      if (r) out[j] = std::move(*r);
      else ok = false;
    }
    if (ok) return out;
  }
  return v;
}

Components canonicalize(const Components& v) {
  std::size_t lead = 0;
  while (lead < 3 && v[lead].is_zero()) ++lead;
  if (lead == 3) throw std::invalid_argument("ray with all components zero");

  int m = 1;
  for (const auto& c : v) m = std::lcm(m, c.conductor());
  const CycNumber inv = v[lead].coerce(m).inverse();
  Components out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = v[j].coerce(m) * inv;

  // scale by the positive rational that makes the coefficients coprime integers
  Integer den_lcm = 1;
  for (const auto& c : out) {
    for (const auto& q : c.coefficients()) {
      if (q != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  Integer num_gcd = 0;
  for (const auto& c : out) {
    for (const auto& q : c.coefficients()) {
      if (q == 0) continue;
      const Integer scaled = q.get_num() * (den_lcm / q.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  const Rational factor(den_lcm, num_gcd);
  for (auto& c : out) c *= factor;
  return restrict_to_smallest_field(out);
}

std::string triple_string(const Components& c) {
  return "(" + c[0].to_string() + "," + c[1].to_string() + "," + c[2].to_string() + ")";
}

}  // namespace

Ray::Ray(Components components) : components_(std::move(components)), canonical_(canonicalize(components_)) {}

CycNumber Ray::norm_squared() const { return inner(*this, *this); }

Ray Ray::coerce(int m) const {
  return Ray(components_[0].coerce(m), components_[1].coerce(m), components_[2].coerce(m));
}

std::string Ray::to_string() const { return triple_string(canonical_); }
std::string Ray::components_string() const { return triple_string(components_); }

bool operator==(const Ray& a, const Ray& b) { return a.canonical_ == b.canonical_; }

std::strong_ordering operator<=>(const Ray& a, const Ray& b) {
  for (std::size_t j = 0; j < 3; ++j) {
    if (auto c = a.canonical_[j] <=> b.canonical_[j]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

CycNumber inner(const Ray& v, const Ray& u) {
  const auto& a = v.components();
  const auto& b = u.components();
  CycNumber sum = a[0].conj() * b[0];
  sum += a[1].conj() * b[1];
  sum += a[2].conj() * b[2];
  return sum;
}

bool is_orthogonal(const Ray& u, const Ray& v) { return inner(v, u).is_zero(); }

Ray complete_basis_third(const Ray& u, const Ray& v) {
  if (!is_orthogonal(u, v)) {
    throw std::invalid_argument("complete_basis_third: " + u.to_string() + " and " + v.to_string() +
                                " are not orthogonal");
  }
  const auto& a = u.components();
  const auto& b = v.components();
  return Ray((a[1] * b[2] - a[2] * b[1]).conj(), (a[2] * b[0] - a[0] * b[2]).conj(),
             (a[0] * b[1] - a[1] * b[0]).conj());
}

BasisCheck validate_basis(const std::array<Ray, 3>& rays) {
  BasisCheck check;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto ip = inner(rays[i], rays[j]);
      if (!ip.is_zero()) check.violations.push_back({i, j, std::move(ip)});
    }
  }
  return check;
}

Basis::Basis(std::array<Ray, 3> rays) : rays_(std::move(rays)) {
  const auto check = validate_basis(rays_);
  if (!check.ok()) {
    const auto& v = check.violations.front();
    throw std::invalid_argument("not a basis: <" + rays_[v.first].components_string() + "|" +
                                rays_[v.second].components_string() + "> = " + v.inner_product.to_string());
  }
}

bool Basis::contains(const Ray& r) const {
  return rays_[0] == r || rays_[1] == r || rays_[2] == r;
}

std::string Basis::to_string() const {
  return "{" + rays_[0].components_string() + "," + rays_[1].components_string() + "," +
         rays_[2].components_string() + "}";
}

// ---------------------------------------------------------------------------
// Ray text parser.

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  CycNumber expression() {
    CycNumber acc = term();
    while (!done()) {
      if (eat("+")) {
        acc += term();
      } else if (peek_minus()) {
        advance_minus();
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  void expect(std::string_view tok) {
    skip_ws();
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }

  bool at(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " +
                                what);
  }

 private:
  CycNumber term() {
    bool negative = false;
    while (true) {
      skip_ws();
      if (eat("+")) continue;
      if (peek_minus()) {
        advance_minus();
        negative = !negative;
        continue;
      }
      break;
    }
    CycNumber acc = factor();
    while (true) {
      skip_ws();
      if (eat("*")) {
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return negative ? -acc : acc;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'w' || c == 'i' || c == 'r' || c == '(' ||
           at("ω") || at("√");
  }

  CycNumber factor() {
    skip_ws();
    CycNumber base;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      base = CycNumber(Rational(Integer(std::string(s_.substr(pos_, end - pos_)))));
      pos_ = end;
    } else if (eat("w") || eat("ω")) {
      base = omega();
    } else if (eat("i")) {
      base = CycNumber::root_of_unity(4, 1);
    } else if (eat("√2") || eat("r2")) {
      base = CycNumber::sqrt2(8);
    } else if (eat("(")) {
      base = expression();
      expect(")");
    } else {
      fail("expected a number, w, i, or sqrt2");
    }
    return power_of(base);
  }

  CycNumber power_of(const CycNumber& base) {
    std::int64_t k = 1;
    if (eat("^")) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      if (end == pos_) fail("expected exponent");
      k = std::stoll(std::string(s_.substr(pos_, end - pos_)));
      pos_ = end;
    } else if (eat("²")) {
      k = 2;
    } else if (eat("³")) {
      k = 3;
    }
    CycNumber out = CycNumber::rational(base.conductor(), 1);
    for (std::int64_t j = 0; j < k; ++j) out *= base;
    return out;
  }

  bool peek_minus() { return at("-") || at("−"); }
  void advance_minus() {
    if (!eat("-")) eat("−");
  }

  bool eat(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNumber parse_cyc(std::string_view text) {
  ExprParser p(text);
  auto value = p.expression();
  if (!p.done()) p.fail("trailing characters");
  return value;
}

Ray parse_ray(std::string_view text) {
  ExprParser p(text);
  p.expect("(");
  Components c;
  c[0] = p.expression();
  p.expect(",");
  c[1] = p.expression();
  p.expect(",");
  c[2] = p.expression();
  p.expect(")");
  if (!p.done()) p.fail("trailing characters");
  return Ray(std::move(c));
}

}  // namespace kskit
