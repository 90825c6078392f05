#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/theory/genfn.hpp"
#include "cmholes/theory/rootfind.hpp"

namespace cmholes {

// Laws of the unexplored graph after a fraction alpha of the vertices has been
// explored: g(alpha, s) = f(a - (1 - s) b) / (1 - alpha) with
// a = f^{-1}(1 - alpha), b = f'(a) / f'(1), and its size-biased version
// hat g(alpha, s) = f'(sigma) / f'(a), sigma = a - (1 - s) b.
class FluidModel {
 public:
  explicit FluidModel(GenFn f) : f_(std::move(f)) {
    const SizeBiased fhat(f_);
    rho_pi_ = solve_rho(fhat);
    xi_ = cmholes::xi(f_, rho_pi_);
    // D(alpha) = f''(a) / f'(1) decreases with alpha; solve D = 1 in a.
    const double mu = f_.fp(1.0);
    BisectionOptions opt;
    opt.xtol = 1e-16;
    if (!(f_.fpp(0.0) < mu)) throw NumericalFailure("alpha_c: remaining graph never becomes critical");
    a_c_ = bisect([&](double a) { return f_.fpp(a) - mu; }, 0.0, 1.0, opt);
    alpha_c_ = 1.0 - f_.f(a_c_);
  }

  const GenFn& genfn() const { return f_; }
  double rho_pi() const { return rho_pi_; }
  double xi() const { return xi_; }
  double alpha_c() const { return alpha_c_; }

  double a(double alpha) const {
    check_alpha(alpha);
    if (alpha == alpha_c_) return a_c_;
    return f_.inverse(1.0 - alpha);
  }
  double b(double alpha) const { return f_.fp(a(alpha)) / f_.fp(1.0); }

  double g(double alpha, double s) const {
    const double av = a(alpha);
    const double bv = f_.fp(av) / f_.fp(1.0);
    return f_.f(av - (1.0 - s) * bv) / (1.0 - alpha);
  }

  double ghat(double alpha, double s) const {
    const double av = a(alpha);
    const double bv = f_.fp(av) / f_.fp(1.0);
    return f_.fp(av - (1.0 - s) * bv) / f_.fp(av);
  }

  double ds_ghat(double alpha, double s) const {
    const double av = a(alpha);
    const double bv = f_.fp(av) / f_.fp(1.0);
    return bv * f_.fpp(av - (1.0 - s) * bv) / f_.fp(av);
  }

  // Criticality of the remaining graph, d/ds hat g(alpha, 1) = f''(a) / f'(1).
  double criticality(double alpha) const { return f_.fpp(a(alpha)) / f_.fp(1.0); }

  double dalpha_ghat(double alpha, double s) const {
    const double av = a(alpha);
    const double mu = f_.fp(1.0);
    const double fpa = f_.fp(av);
    const double fppa = f_.fpp(av);
    const double bv = fpa / mu;
    const double da = -1.0 / fpa;
    const double db = -fppa / (fpa * mu);
    const double sigma = av - (1.0 - s) * bv;
    const double dsigma = da - (1.0 - s) * db;
    return (f_.fpp(sigma) * dsigma * fpa - f_.fp(sigma) * fppa * da) / (fpa * fpa);
  }

  // 1 - hat g(alpha, 1 - rho), accurate for small rho.
  double complement(double alpha, double rho) const {
    const double av = a(alpha);
    const double bv = f_.fp(av) / f_.fp(1.0);
    return f_.derivative_drop(av, rho * bv / av);
  }

  // alpha in [0, alpha_c] with 1 - rho = hat g(alpha, 1 - rho).
  double alpha_of_rho(double rho) const {
    if (!(rho > 0.0 && rho <= rho_pi_ * (1.0 + 1e-15)))
      throw DomainViolation("rho must lie in (0, rho_pi]");
    auto residual = [&](double al) { return complement(al, rho) - rho; };
    // At rho_pi the residual at alpha = 0 vanishes up to rounding.
    if (residual(0.0) <= 0.0) return 0.0;
    BisectionOptions opt;
    opt.xtol = 1e-16;
    return bisect(residual, 0.0, alpha_c_, opt);
  }

  // Implicit derivative of alpha(rho).
  double alpha_prime(double rho) const { return alpha_prime_at(alpha_of_rho(rho), rho); }

  double alpha_prime_at(double alpha, double rho) const {
    return (ds_ghat(alpha, 1.0 - rho) - 1.0) / dalpha_ghat(alpha, 1.0 - rho);
  }

  // Inverse of alpha_of_rho: the positive root rho of 1 - rho = hat g(alpha, 1 - rho);
  // zero at alpha_c.
  double rho_of_alpha(double alpha) const {
    check_alpha(alpha);
    if (alpha == 0.0) return rho_pi_;
    if (alpha >= alpha_c_) return 0.0;
    auto phi = [&](double rho) { return complement(alpha, rho) - rho; };
    double lo = kRhoLowerBracket;
    while (phi(lo) <= 0.0 && lo > 1e-300) lo *= 1e-8;
    if (phi(lo) <= 0.0) return 0.0;
    BisectionOptions opt;
    opt.xtol = 1e-16;
    return bisect(phi, lo, 1.0, opt);
  }

  // Coefficients of s^i in g(alpha, s), i = 0 .. i_max.
  std::vector<double> g_coefficients(double alpha, int i_max) const {
    if (i_max < 0) throw DomainViolation("i_max must be nonnegative");
    std::vector<double> out(static_cast<std::size_t>(i_max) + 1, 0.0);
    const double av = a(alpha);
    const double bv = f_.fp(av) / f_.fp(1.0);
    if (f_.kind() == GenFn::Kind::poisson) {
      // g(alpha, .) is the Poisson law of mean c b.
      const double lambda = f_.poisson_mean() * bv;
      for (int k = 0; k <= i_max; ++k) out[k] = std::exp(k * std::log(lambda) - lambda - std::lgamma(k + 1.0));
      return out;
    }
    // f(u + v s) = sum_i pi_i (u + v)^i Bin(i, v / (u + v)) with u = a - b, v = b.
    const int top = f_.kind() == GenFn::Kind::regular ? f_.regular_degree()
                                                      : static_cast<int>(f_.coefficients().size()) - 1;
    const double p = av > 0.0 ? bv / av : 0.0;
    for (int i = 0; i <= top; ++i) {
      const double pi = f_.coefficient(i);
      if (pi == 0.0) continue;
      const double scale = pi * std::pow(av, i) / (1.0 - alpha);
      for (int k = 0; k <= std::min(i, i_max); ++k) {
        double pmf;
        if (p <= 0.0)
          pmf = k == 0 ? 1.0 : 0.0;
        else if (p >= 1.0)
          pmf = k == i ? 1.0 : 0.0;
        else
          pmf = std::exp(std::lgamma(i + 1.0) - std::lgamma(k + 1.0) - std::lgamma(i - k + 1.0) + k * std::log(p) +
                         (i - k) * std::log1p(-p));
        out[k] += scale * pmf;
      }
    }
    return out;
  }

 private:
  void check_alpha(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= alpha_c_))
      throw DomainViolation("alpha must lie in [0, alpha_c] = [0, " + std::to_string(alpha_c_) + "]");
  }

  GenFn f_;
  double rho_pi_ = 0.0;
  double xi_ = 0.0;
  double a_c_ = 0.0;
  double alpha_c_ = 0.0;
};

inline double alpha_c(const GenFn& f) { return FluidModel(f).alpha_c(); }

}  // namespace cmholes
