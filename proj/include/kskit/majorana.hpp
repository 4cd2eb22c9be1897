// Majorana (stellar) representation of qutrit rays as spin-1 states.
//
// A ray (c0,c1,c2) is sent to the roots of p(z) = c0 z² - √2 c1 z + c2,
// and each root to the unit sphere by inverse stereographic projection
// with z = 0 at the north pole and z = ∞ at the south pole. When the
// degree drops, the missing roots sit at ∞. Under this convention
// (1,0,0) has both points at the north pole, (0,1,0) one at each pole and
// (0,0,1) both at the south pole.
//
// This is the only floating-point module.
#pragma once

#include <array>
#include <filesystem>
#include <string_view>
#include <utility>

#include "kskit/colorability.hpp"
#include "kskit/rays.hpp"

namespace kskit {

struct SpherePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double distance(const SpherePoint& o) const;
};

inline constexpr std::string_view kMajoranaConvention =
    "p(z) = c0*z^2 - sqrt(2)*c1*z + c2; root z -> (2Re z, 2Im z, 1-|z|^2)/(1+|z|^2); "
    "z = 0 is the north pole, z = inf the south pole";

/// The two Majorana points, ordered lexicographically by (x, y, z).
std::pair<SpherePoint, SpherePoint> majorana_points(const Ray& r);

/// True when the unordered pairs coincide within `tol`.
bool same_point_pair(const std::pair<SpherePoint, SpherePoint>& a, const std::pair<SpherePoint, SpherePoint>& b,
                     double tol);

/// CSV "ray_index,ray,point,x,y,z", one row per point, preceded by a
/// "# convention" comment line and the header row.
std::string majorana_csv(const KSInstance& inst);
void export_majorana(const KSInstance& inst, const std::filesystem::path& path);

}  // namespace kskit
