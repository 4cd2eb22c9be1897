#include "kskit/majorana.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace kskit {
namespace {

using Complex = std::complex<double>;

constexpr SpherePoint kNorth{0.0, 0.0, 1.0};
constexpr SpherePoint kSouth{0.0, 0.0, -1.0};

SpherePoint project(Complex z) {
  const double r2 = std::norm(z);
  if (std::isinf(r2)) return kSouth;
  const double d = 1.0 + r2;
  return {2.0 * z.real() / d, 2.0 * z.imag() / d, (1.0 - r2) / d};
}

// Roots of a z^2 + b z + c with a != 0, avoiding cancellation.
std::pair<Complex, Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  const Complex disc = std::sqrt(b * b - 4.0 * a * c);
  // choose the sign that makes |b + sign*disc| large
  const Complex q = std::real(std::conj(b) * disc) >= 0.0 ? -0.5 * (b + disc) : -0.5 * (b - disc);
  if (std::abs(q) == 0.0) return {Complex{0.0}, Complex{0.0}};
  return {q / a, c / q};
}

bool lex_less(const SpherePoint& a, const SpherePoint& b) { return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z); }

}  // namespace

double SpherePoint::distance(const SpherePoint& o) const {
  return std::sqrt((x - o.x) * (x - o.x) + (y - o.y) * (y - o.y) + (z - o.z) * (z - o.z));
}

std::pair<SpherePoint, SpherePoint> majorana_points(const Ray& r) {
  const auto& c = r.canonical();
  // Exact degree detection; numerics only for the roots themselves.
  SpherePoint p1;
  SpherePoint p2;
  if (!c[0].is_zero()) {
    const Complex a = c[0].evaluate();
    const Complex b = -std::sqrt(2.0) * c[1].evaluate();
    if (c[2].is_zero()) {
      // p(z) = z (a z + b)
      p1 = kNorth;
      p2 = c[1].is_zero() ? kNorth : project(-b / a);
    } else {
      const Complex cc = c[2].evaluate();
      const double scale = std::max({std::abs(a), std::abs(b), std::abs(cc)});
      const auto [z1, z2] = quadratic_roots(a / scale, b / scale, cc / scale);
      p1 = project(z1);
      p2 = project(z2);
    }
  } else if (!c[1].is_zero()) {
    // linear; the second root is at infinity
    p1 = project(c[2].evaluate() / (std::sqrt(2.0) * c[1].evaluate()));
    p2 = kSouth;
  } else {
    p1 = kSouth;
    p2 = kSouth;
  }
  if (lex_less(p2, p1)) std::swap(p1, p2);
  return {p1, p2};
}

bool same_point_pair(const std::pair<SpherePoint, SpherePoint>& a, const std::pair<SpherePoint, SpherePoint>& b,
                     double tol) {
  const bool straight = a.first.distance(b.first) <= tol && a.second.distance(b.second) <= tol;
  const bool crossed = a.first.distance(b.second) <= tol && a.second.distance(b.first) <= tol;
  return straight || crossed;
}

std::string majorana_csv(const KSInstance& inst) {
  std::ostringstream out;
  out << "# majorana convention: " << kMajoranaConvention << '\n';
  out << "ray_index,ray,point,x,y,z\n";
  char buf[128];
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& r = inst.rays()[i];
    const auto [p, q] = majorana_points(r);
    std::size_t k = 1;
    for (const auto& pt : {p, q}) {
      // avoid "-0" so that output is stable across platforms
      auto clean = [](double v) { return std::abs(v) < 5e-16 ? 0.0 : v; };
      std::snprintf(buf, sizeof buf, "%.15f,%.15f,%.15f", clean(pt.x), clean(pt.y), clean(pt.z));
      out << i << ",\"" << r.to_string() << "\"," << k++ << ',' << buf << '\n';
    }
  }
  return out.str();
}

void export_majorana(const KSInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << majorana_csv(inst);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace kskit
