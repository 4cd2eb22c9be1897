#include "kskit/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace kskit {
namespace {

struct Field {
  int n = 1;
  int phi = 1;
  // reduction of x^k modulo Phi_n, for k in [0, table_size)
  std::vector<std::vector<Rational>> power;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

const std::vector<Integer>& cyclotomic_locked(int n, std::map<int, std::vector<Integer>>& polys) {
  if (auto it = polys.find(n); it != polys.end()) return it->second;
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_locked(d, polys));
  }
  return polys.emplace(n, std::move(p)).first->second;
}

std::map<int, std::vector<Integer>>& poly_cache() {
  static std::map<int, std::vector<Integer>> polys;
  return polys;
}

const Field& field(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::map<int, std::unique_ptr<Field>> fields;
  std::lock_guard lock(cache_mutex());
  if (auto it = fields.find(n); it != fields.end()) return *it->second;

  auto f = std::make_unique<Field>();
  f->n = n;
  const auto& poly = cyclotomic_locked(n, poly_cache());
  f->phi = static_cast<int>(poly.size()) - 1;
  const auto phi = static_cast<std::size_t>(f->phi);
  const std::size_t table = std::max<std::size_t>(static_cast<std::size_t>(n), 2 * phi);
  f->power.assign(table, std::vector<Rational>(phi, 0));
  for (std::size_t k = 0; k < phi; ++k) f->power[k][k] = 1;
  for (std::size_t k = phi; k < table; ++k) {
    const auto& prev = f->power[k - 1];
    auto& cur = f->power[k];
    // x * prev, then replace x^phi by -(poly[0] + ... + poly[phi-1] x^(phi-1))
    const Rational top = prev[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * poly[j];
    }
  }
  return *fields.emplace(n, std::move(f)).first->second;
}

std::size_t wrap(std::int64_t power, int n) {
  auto r = power % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

void add_scaled(std::vector<Rational>& acc, const std::vector<Rational>& v, const Rational& s) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) acc[j] += s * v[j];
  }
}

// Solves A x = b over Q. A is given column-wise; returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& b) {
  const std::size_t rows = b.size();
  const std::size_t ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = b[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= ncols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (m[r][ncols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(ncols, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][ncols];
  return x;
}

std::string superscript(std::int64_t k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char ch : std::to_string(k)) s += digits[ch - '0'];
  return s;
}

std::string root_symbol(int n, std::size_t k) {
  if (k == 0) return "";
  if (n == 3) return k == 1 ? "ω" : "ω²";
  if (n == 4) return k == 1 ? "i" : "i" + superscript(static_cast<std::int64_t>(k));
  std::string s = "ζ" + std::to_string(n);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

// q * symbol, with the sign pulled to the front
std::string scaled(const Rational& q, const std::string& symbol) {
  if (symbol.empty()) return rational_to_string(q);
  if (q == 1) return symbol;
  if (q == -1) return "-" + symbol;
  if (q.get_den() == 1) return rational_to_string(q) + symbol;
  return "(" + rational_to_string(q) + ")" + symbol;
}

std::string join_sum(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty() && p.front() != '-') out += "+";
    out += p;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  std::lock_guard lock(cache_mutex());
  return cyclotomic_locked(n, poly_cache());
}

std::string rational_to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

CycNumber::CycNumber() : conductor_(1), coeffs_(1, 0) {}
CycNumber::CycNumber(long value) : conductor_(1), coeffs_(1, Rational(value)) {}
CycNumber::CycNumber(const Rational& value) : conductor_(1), coeffs_(1, value) {}
CycNumber::CycNumber(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycNumber CycNumber::zero(int conductor) {
  return {conductor, std::vector<Rational>(static_cast<std::size_t>(field(conductor).phi), 0)};
}

CycNumber CycNumber::rational(int conductor, const Rational& value) {
  auto z = zero(conductor);
  z.coeffs_[0] = value;
  return z;
}

CycNumber CycNumber::root_of_unity(int conductor, std::int64_t power) {
  const auto& f = field(conductor);
  return {conductor, f.power[wrap(power, conductor)]};
}

CycNumber CycNumber::from_terms(int conductor, std::span<const CycTerm> terms) {
  const auto& f = field(conductor);
  auto z = zero(conductor);
  for (const auto& t : terms) {
    if (t.denominator == 0) throw std::invalid_argument("zero denominator in cyclotomic term");
    Rational q(t.numerator, t.denominator);
    q.canonicalize();
    add_scaled(z.coeffs_, f.power[wrap(t.power, conductor)], q);
  }
  return z;
}

CycNumber CycNumber::sqrt2(int conductor) {
  if (conductor % 8 != 0) throw std::invalid_argument("sqrt(2) needs a conductor divisible by 8");
  const std::int64_t k = conductor / 8;
  return root_of_unity(conductor, k) + root_of_unity(conductor, -k);
}

bool CycNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNumber::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<Rational> CycNumber::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

bool CycNumber::is_real() const { return conj() == *this; }

CycNumber CycNumber::conj() const {
  const auto& f = field(conductor_);
  auto out = zero(conductor_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    add_scaled(out.coeffs_, f.power[wrap(-static_cast<std::int64_t>(k), conductor_)], coeffs_[k]);
  }
  return out;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto q = as_rational()) return rational(conductor_, 1 / *q);
  const auto& f = field(conductor_);
  std::vector<std::vector<Rational>> cols;
  cols.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    cols.push_back((*this * CycNumber(conductor_, f.power[j])).coeffs_);
  }
  std::vector<Rational> e0(coeffs_.size(), 0);
  e0[0] = 1;
  auto x = solve_columns(cols, e0);
  // multiplication by a nonzero field element is invertible
  return {conductor_, std::move(*x)};
}

CycNumber CycNumber::coerce(int m) const {
  if (m == conductor_) return *this;
  if (m < 1 || m % conductor_ != 0) {
    throw std::invalid_argument("cannot coerce Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" +
                                std::to_string(m) + ")");
  }
  const auto& f = field(m);
  const std::int64_t step = m / conductor_;
  auto out = zero(m);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    add_scaled(out.coeffs_, f.power[wrap(static_cast<std::int64_t>(k) * step, m)], coeffs_[k]);
  }
  return out;
}

std::optional<CycNumber> CycNumber::restrict_to(int m) const {
  if (m == conductor_) return *this;
  if (m < 1 || conductor_ % m != 0) return std::nullopt;
  const int phi_m = field(m).phi;
  std::vector<std::vector<Rational>> cols;
  for (int j = 0; j < phi_m; ++j) cols.push_back(root_of_unity(m, j).coerce(conductor_).coeffs_);
  auto x = solve_columns(cols, coeffs_);
  if (!x) return std::nullopt;
  return CycNumber(m, std::move(*x));
}

std::complex<double> CycNumber::evaluate() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
    z += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::vector<CycTerm> CycNumber::terms() const {
  std::vector<CycTerm> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    out.push_back({static_cast<std::int64_t>(k), coeffs_[k].get_num(), coeffs_[k].get_den()});
  }
  return out;
}

std::string CycNumber::to_string() const {
  if (is_zero()) return "0";
  if (auto q = as_rational()) return rational_to_string(*q);
  const int n = conductor_;
  for (int k = 1; k < n; ++k) {
    const auto t = *this * root_of_unity(n, -k);
    if (auto q = t.as_rational()) return scaled(*q, root_symbol(n, static_cast<std::size_t>(k)));
  }
  if (n % 8 == 0) {
    auto x = solve_columns({rational(n, 1).coeffs_, sqrt2(n).coeffs_}, coeffs_);
    if (x) {
      std::vector<std::string> parts;
      if ((*x)[0] != 0) parts.push_back(rational_to_string((*x)[0]));
      parts.push_back(scaled((*x)[1], "√2"));
      return join_sum(parts);
    }
  }
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) parts.push_back(scaled(coeffs_[k], root_symbol(n, k)));
  }
  return join_sum(parts);
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  if (rhs.conductor_ != conductor_) {
    const int m = std::lcm(conductor_, rhs.conductor_);
    *this = coerce(m);
    return *this += rhs.coerce(m);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) { return *this += -rhs; }

CycNumber& CycNumber::operator*=(const CycNumber& rhs) {
  if (rhs.conductor_ != conductor_) {
    const int m = std::lcm(conductor_, rhs.conductor_);
    *this = coerce(m);
    return *this *= rhs.coerce(m);
  }
  const auto& f = field(conductor_);
  const std::size_t phi = coeffs_.size();
  std::vector<Rational> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t d = phi; d < prod.size(); ++d) {
    if (prod[d] != 0) add_scaled(out, f.power[d], prod[d]);
  }
  coeffs_ = std::move(out);
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& rhs) {
  for (auto& q : coeffs_) q *= rhs;
  return *this;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ != b.conductor_) {
    const int m = std::lcm(a.conductor_, b.conductor_);
    return a.coerce(m).coeffs_ == b.coerce(m).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ != b.conductor_) {
    const int m = std::lcm(a.conductor_, b.conductor_);
    return a.coerce(m) <=> b.coerce(m);
  }
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    const int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace kskit
