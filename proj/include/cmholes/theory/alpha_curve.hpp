#pragma once

#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/theory/fluid.hpp"

namespace cmholes {

struct AlphaCurvePoint {
  double rho, alpha, alpha_prime, criticality, g_value;
};

// alpha(rho) sampled on a uniform rho grid from rho_pi down to rho_min.
struct AlphaCurve {
  std::vector<AlphaCurvePoint> points;
};

inline AlphaCurve alpha_curve(const FluidModel& model, int n_grid, double rho_min = 1e-4) {
  if (n_grid < 1) throw DomainViolation("n_grid must be positive");
  if (!(rho_min > 0.0 && rho_min < model.rho_pi())) throw DomainViolation("rho_min must lie in (0, rho_pi)");
  AlphaCurve curve;
  for (int k = 0; k <= n_grid; ++k) {
    const double rho = model.rho_pi() + (rho_min - model.rho_pi()) * k / n_grid;
    const double al = model.alpha_of_rho(rho);
    // alpha' is singular at rho_pi when rho_pi = 1.
    const double ap = k == 0 && model.rho_pi() >= 1.0 ? -std::numeric_limits<double>::infinity()
                                                     : model.alpha_prime_at(al, rho);
    curve.points.push_back({rho, al, ap, model.criticality(al), model.g(al, 1.0 - rho)});
  }
  return curve;
}

}  // namespace cmholes
