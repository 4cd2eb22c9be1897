#include "kskit/weylheisenberg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace kskit {

GeneratorMatrix::GeneratorMatrix(std::string label, Entries entries)
    : label_(std::move(label)), entries_(std::move(entries)) {}

GeneratorMatrix GeneratorMatrix::shift() {
  const CycNumber o = 0;
  const CycNumber l = 1;
  return {"X", {{{o, o, l}, {l, o, o}, {o, l, o}}}};
}

GeneratorMatrix GeneratorMatrix::clock() {
  const CycNumber o = 0;
  const CycNumber w = omega();
  return {"Z", {{{CycNumber(1), o, o}, {o, w, o}, {o, o, w * w}}}};
}

GeneratorMatrix GeneratorMatrix::named(std::string_view label) {
  if (label == "X") return shift();
  if (label == "Z") return clock();
  throw std::invalid_argument("unknown generator '" + std::string(label) + "' (expected X or Z)");
}

bool GeneratorMatrix::is_unitary() const {
  std::array<Ray, 3> cols = {Ray(entries_[0][0], entries_[1][0], entries_[2][0]),
                             Ray(entries_[0][1], entries_[1][1], entries_[2][1]),
                             Ray(entries_[0][2], entries_[1][2], entries_[2][2])};
  if (!validate_basis(cols).ok()) return false;
  const auto n0 = cols[0].norm_squared();
  return cols[1].norm_squared() == n0 && cols[2].norm_squared() == n0;
}

Ray apply(const GeneratorMatrix& m, const Ray& r) {
  const auto& e = m.entries();
  const auto& v = r.components();
  Components out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = e[i][0] * v[0] + e[i][1] * v[1] + e[i][2] * v[2];
  return Ray(std::move(out));
}

std::vector<Ray> ray_set(std::span<const Ray> rays) {
  std::vector<Ray> out(rays.begin(), rays.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_ray_set(std::span<const Ray> a, std::span<const Ray> b) { return ray_set(a) == ray_set(b); }

std::vector<Ray> orbit_closure(std::span<const Ray> seed, std::span<const GeneratorMatrix> gens) {
  std::vector<Ray> found = ray_set(seed);
  std::deque<Ray> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    const Ray r = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Ray image = apply(g, r);
      auto it = std::lower_bound(found.begin(), found.end(), image);
      if (it != found.end() && *it == image) continue;
      found.insert(it, image);
      frontier.push_back(std::move(image));
    }
  }
  return found;
}

SicReport is_sic_povm(std::span<const Ray> rays) {
  SicReport report;
  const auto distinct = ray_set(rays);
  report.count = distinct.size();
  const std::size_t n = distinct.size();
  report.overlaps.assign(n, std::vector<CycNumber>(n));
  std::vector<CycNumber> norms;
  norms.reserve(n);
  for (const auto& r : distinct) norms.push_back(r.norm_squared());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto ip = inner(distinct[i], distinct[j]);
      report.overlaps[i][j] = ip * ip.conj() / (norms[i] * norms[j]);
    }
  }
  if (n != 9) {
    report.reason = "a qutrit SIC-POVM has 9 rays, got " + std::to_string(n);
    return report;
  }
  for (std::size_t i = 0; i < n && report.reason.empty(); ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto ip = inner(distinct[i], distinct[j]);
      if (!(CycNumber(4) * ip * ip.conj() == norms[i] * norms[j])) {
        report.reason = "overlap of " + distinct[i].to_string() + " and " + distinct[j].to_string() + " is " +
                        report.overlaps[i][j].to_string() + ", not 1/4";
        break;
      }
    }
  }
  report.is_sic = report.reason.empty();
  return report;
}

}  // namespace kskit
