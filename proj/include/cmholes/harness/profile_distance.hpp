#pragma once

#include <algorithm>
#include <cmath>

#include "cmholes/error.hpp"
#include "cmholes/explore/contour.hpp"
#include "cmholes/explore/induced_dfs.hpp"
#include "cmholes/theory/profile.hpp"

namespace cmholes {

// sup over u in [0, 2] of |X_{ceil(uN)} / N - h(u)|, with X = 0 past the end
// of the contour. Evaluated at every integer step n in [0, 2N].
inline double profile_distance(const ContourProcess& contour, std::size_t n_vertices, const ProfileCurve& curve) {
  if (n_vertices == 0 || contour.heights.empty()) throw DomainViolation("profile distance of an empty exploration");
  if (curve.points.empty()) throw DomainViolation("profile distance against an empty curve");
  const double n = static_cast<double>(n_vertices);
  double sup = 0.0;
  for (std::size_t k = 0; k <= 2 * n_vertices; ++k) {
    const double x = k < contour.heights.size() ? contour.heights[k] / n : 0.0;
    sup = std::max(sup, std::abs(x - curve.height_at(static_cast<double>(k) / n)));
  }
  return sup;
}

inline double profile_distance(const ExplorationResult& res, const ProfileCurve& curve) {
  return profile_distance(res.contour, res.n_vertices, curve);
}

// End of the excursion that contains the first maximum, in contour steps.
inline std::size_t contour_support_end(const ContourProcess& contour) {
  return contour.excursion_around(contour.first_argmax()).second;
}

}  // namespace cmholes
