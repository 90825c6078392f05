#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cmholes/error.hpp"
#include "cmholes/theory/dilog.hpp"
#include "cmholes/theory/fluid.hpp"
#include "cmholes/theory/quadrature.hpp"

namespace cmholes {

inline constexpr double kEulerGamma = 0.57721566490153286;

struct BoundOptions {
  // The integral over (0, rho_min) is replaced by its linear tail estimate.
  double rho_min = 1e-6;
  QuadratureOptions quad{1e-13, 1e-11, 20000};
};

struct BoundResult {
  double value = 0.0;         // reported length, |signed_value|
  double signed_value = 0.0;  // the integral as written, negative since alpha' < 0
  double tail = 0.0;          // signed contribution of (0, rho_min)
  double error = 0.0;         // quadrature error estimate
};

// Power p of the substitution u = rho_pi - v^p. When rho_pi = 1 and the
// minimum degree is k, alpha' blows up like (1 - u)^{-(k-2)/(k-1)} at the top.
inline int rho_substitution_power(const FluidModel& model) {
  if (model.rho_pi() < 1.0) return 2;
  return std::max(2, model.genfn().min_degree() - 1);
}

// Relative width of the segment below rho_pi that is integrated in alpha.
inline constexpr double kTopSegment = 1e-6;

// int_lo^hi K(u, alpha(u)) alpha'(u) du for 0 < lo <= hi <= rho_pi.
// Below rho_pi (1 - kTopSegment) the integral is taken in v = (rho_pi - u)^{1/p};
// above it, where alpha(u) cannot be resolved in double precision when
// rho_pi = 1, in alpha via u = rho(alpha).
template <class K>
QuadratureResult integrate_along_curve(const FluidModel& model, K&& kernel, double lo, double hi,
                                       const QuadratureOptions& quad) {
  const double top = model.rho_pi();
  const double cut = top * (1.0 - kTopSegment);
  QuadratureResult out;
  if (lo < cut) {
    const int p = rho_substitution_power(model);
    const double b = std::min(hi, cut);
    const auto q = integrate(
        [&](double v) {
          const double u = top - std::pow(v, p);
          const double al = model.alpha_of_rho(u);
          return p * std::pow(v, p - 1) * kernel(u, al) * model.alpha_prime_at(al, u);
        },
        std::pow(top - b, 1.0 / p), std::pow(top - lo, 1.0 / p), quad);
    out.value += q.value;
    out.error += q.error;
    out.intervals += q.intervals;
  }
  if (hi > cut) {
    const double a_hi = hi >= top ? 0.0 : model.alpha_of_rho(hi);
    const double a_lo = model.alpha_of_rho(std::max(lo, cut));
    const auto q = integrate([&](double al) { return -kernel(model.rho_of_alpha(al), al); }, a_hi, a_lo, quad);
    out.value += q.value;
    out.error += q.error;
    out.intervals += q.intervals;
  }
  return out;
}

// 1 / sum_{j=1..m} D^j.
inline double geometric_weight(double d, int m) {
  double denom = 0.0;
  double power = 1.0;
  for (int j = 1; j <= m; ++j) {
    power *= d;
    denom += power;
  }
  return 1.0 / denom;
}

// m u alpha'(u) / sum_{j=1..m} D(alpha(u))^j, D = d/ds hat g(alpha, 1).
inline double bound_integrand(const FluidModel& model, int m, double u) {
  const double al = model.alpha_of_rho(u);
  return m * u * model.alpha_prime_at(al, u) * geometric_weight(model.criticality(al), m);
}

inline BoundResult bound_m(const FluidModel& model, int m, const BoundOptions& opt = {}) {
  if (m < 1) throw DomainViolation("m must be at least 1");
  const double lo = std::min(opt.rho_min, 0.5 * model.rho_pi());
  const auto q = integrate_along_curve(
      model, [&](double u, double al) { return m * u * geometric_weight(model.criticality(al), m); }, lo,
      model.rho_pi(), opt.quad);
  BoundResult r;
  r.tail = 0.5 * lo * bound_integrand(model, m, lo);
  r.signed_value = q.value + r.tail;
  r.value = std::abs(r.signed_value);
  r.error = q.error;
  return r;
}

inline BoundResult bound_m(const GenFn& f, int m, const BoundOptions& opt = {}) { return bound_m(FluidModel(f), m, opt); }

inline double bound_main(const FluidModel& model, const BoundOptions& opt = {}) { return bound_m(model, 1, opt).value; }
inline double bound_main(const GenFn& f, const BoundOptions& opt = {}) { return bound_m(f, 1, opt).value; }

// The same length integrated over alpha instead of rho:
// m int_0^{alpha_c} rho(alpha) / sum_j D(alpha)^j d alpha.
inline double bound_m_alpha_form(const FluidModel& model, int m, const QuadratureOptions& quad = {1e-13, 1e-11, 20000}) {
  if (m < 1) throw DomainViolation("m must be at least 1");
  const auto q = integrate(
      [&](double al) { return m * model.rho_of_alpha(al) * geometric_weight(model.criticality(al), m); },
      0.0, model.alpha_c(), quad);
  return q.value;
}

// Closed form for d-regular graphs:
// d / (2 (d - 1)) (1 - int_0^1 ((1 - x^{1/(d-1)}) / (1 - x))^{2/(d-2)} dx).
inline double bound_regular(int d) {
  if (d < 3) throw DomainViolation("bound_regular needs d >= 3");
  const double e = 1.0 / (d - 1);
  const double p = 2.0 / (d - 2);
  const auto q = integrate(
      [&](double x) {
        const double lx = std::log(x);
        return std::pow(std::expm1(e * lx) / std::expm1(lx), p);
      },
      0.0, 1.0, {1e-13, 1e-12, 20000});
  return d / (2.0 * (d - 1)) * (1.0 - q.value);
}

// Erdos-Renyi display evaluated as written:
// rho / (-ln(1 - rho)) (gamma + rho + ln(-ln(1 - rho)) - Li_2(1 - rho)).
inline double bound_er(double c) {
  if (!(c > 1.0)) throw Subcritical("bound_er needs c > 1");
  const double rho = solve_rho(GenFn::poisson(c));
  const double l = -std::log1p(-rho);
  return rho / l * (kEulerGamma + rho + std::log(l) - dilog(1.0 - rho));
}

// Erdos-Renyi length from integrating the bound in closed form:
// (gamma + ln c + ln rho - rho + E_1(c rho)) / c.
inline double bound_er_exponential_integral(double c) {
  if (!(c > 1.0)) throw Subcritical("bound_er needs c > 1");
  const double rho = solve_rho(GenFn::poisson(c));
  return (kEulerGamma + std::log(c) + std::log(rho) - rho + exp_integral_e1(c * rho)) / c;
}

}  // namespace cmholes
