#pragma once

#include <algorithm>
#include <ostream>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/theory/bounds.hpp"
#include "cmholes/theory/fluid.hpp"

namespace cmholes {

struct ProfileOptions {
  int n_grid = 400;
  double rho_min = 1e-4;
  QuadratureOptions quad{1e-13, 1e-10, 20000};
};

struct ProfilePoint {
  double rho, alpha, x_up, y_up, x_down, y_down;
};

// Limit shape of the rescaled contour: the increasing arc (x_up, y_up) and the
// decreasing arc (x_down, y_down), both parametrized by rho from rho_pi down
// to rho_min. Points are stored in that order.
struct ProfileCurve {
  double rho_pi = 0.0;
  double xi = 0.0;
  std::vector<ProfilePoint> points;

  double peak_height() const { return points.back().y_up; }

  // h(u): the curve as a function of rescaled time u = n / N, zero past 2 xi.
  double height_at(double u) const {
    if (points.empty() || u <= 0.0) return 0.0;
    const auto& last = points.back();
    if (u <= last.x_up) {
      // x_up increases along the stored order.
      auto it = std::lower_bound(points.begin(), points.end(), u,
                                 [](const ProfilePoint& p, double x) { return p.x_up < x; });
      if (it == points.begin()) return it->y_up;
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double w = hi.x_up > lo.x_up ? (u - lo.x_up) / (hi.x_up - lo.x_up) : 1.0;
      return lo.y_up + w * (hi.y_up - lo.y_up);
    }
    if (u <= last.x_down) return last.y_up;
    if (u >= 2.0 * xi) return 0.0;
    // x_down decreases along the stored order.
    auto it = std::lower_bound(points.begin(), points.end(), u,
                               [](const ProfilePoint& p, double x) { return p.x_down > x; });
    if (it == points.begin()) return it->y_down;
    const auto& lo = *it;
    const auto& hi = *(it - 1);
    const double w = hi.x_down > lo.x_down ? (u - lo.x_down) / (hi.x_down - lo.x_down) : 1.0;
    return lo.y_down + w * (hi.y_down - lo.y_down);
  }
};

inline ProfileCurve profile(const FluidModel& model, const ProfileOptions& opt = {}) {
  if (opt.n_grid < 2) throw DomainViolation("profile needs at least two grid intervals");
  if (!(opt.rho_min > 0.0 && opt.rho_min < model.rho_pi())) throw DomainViolation("rho_min must lie in (0, rho_pi)");
  ProfileCurve curve;
  curve.rho_pi = model.rho_pi();
  curve.xi = model.xi();
  // Uniform in alpha: alpha moves fastest near rho_pi.
  const double alpha_end = model.alpha_of_rho(opt.rho_min);
  std::vector<double> rhos(static_cast<std::size_t>(opt.n_grid) + 1);
  rhos.front() = model.rho_pi();
  rhos.back() = opt.rho_min;
  for (int k = 1; k < opt.n_grid; ++k) rhos[k] = model.rho_of_alpha(alpha_end * k / opt.n_grid);

  double x = 0.0;
  double y = 0.0;
  for (std::size_t k = 0; k < rhos.size(); ++k) {
    const double rho = rhos[k];
    if (k > 0) {
      const double lo = rhos[k];
      const double hi = rhos[k - 1];
      // Both integrands carry alpha' < 0; the arcs are reported with positive orientation.
      x -= integrate_along_curve(
               model, [&](double r, double al) { return (2.0 - r) / model.criticality(al); }, lo, hi, opt.quad)
               .value;
      y -= integrate_along_curve(
               model, [&](double r, double al) { return r / model.criticality(al); }, lo, hi, opt.quad)
               .value;
    }
    const double al = k == 0 ? 0.0 : model.alpha_of_rho(rho);
    const double shift = 2.0 * (1.0 - al) * (1.0 - model.g(al, 1.0 - rho));
    curve.points.push_back({rho, al, x, y, x + shift, y});
  }
  return curve;
}

inline void write_profile_csv(std::ostream& out, const ProfileCurve& curve) {
  out.precision(12);
  out << "rho,x_up,y_up,x_down,y_down\n";
  for (const auto& p : curve.points)
    out << p.rho << ',' << p.x_up << ',' << p.y_up << ',' << p.x_down << ',' << p.y_down << '\n';
}

}  // namespace cmholes
