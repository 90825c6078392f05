#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/graph/degree.hpp"
#include "cmholes/theory/rootfind.hpp"

namespace cmholes {

// Probability generating function f(s) = sum_i pi_i s^i on [0, 1] with its
// first two derivatives and its inverse. Regular and Poisson laws use their
// closed forms; the Poisson law is not truncated here.
class GenFn {
 public:
  enum class Kind { regular, poisson, explicit_pmf };

  static GenFn regular(int d) {
    if (d < 1) throw DomainViolation("regular degree must be positive");
    GenFn g;
    g.kind_ = Kind::regular;
    g.d_ = d;
    return g;
  }

  static GenFn poisson(double c) {
    if (!(c > 0.0)) throw DomainViolation("poisson mean must be positive");
    GenFn g;
    g.kind_ = Kind::poisson;
    g.c_ = c;
    return g;
  }

  // Nonnegative coefficients, normalized to sum one.
  static GenFn from_coefficients(std::vector<double> coef) {
    double total = 0.0;
    for (double p : coef) {
      if (!(p >= 0.0) || !std::isfinite(p)) throw DomainViolation("coefficients must be nonnegative");
      total += p;
    }
    if (!(total > 0.0)) throw DomainViolation("coefficients have zero mass");
    while (coef.size() > 1 && coef.back() == 0.0) coef.pop_back();
    for (double& p : coef) p /= total;
    GenFn g;
    g.kind_ = Kind::explicit_pmf;
    g.coef_ = std::move(coef);
    return g;
  }

  static GenFn from_distribution(const DegreeDistribution& dist) {
    switch (dist.kind()) {
      case DegreeDistribution::Kind::regular: return regular(dist.regular_degree());
      case DegreeDistribution::Kind::poisson: return poisson(dist.poisson_mean());
      case DegreeDistribution::Kind::explicit_pmf: return from_coefficients(dist.pmf());
    }
    throw DomainViolation("unknown distribution kind");
  }

  Kind kind() const { return kind_; }
  int regular_degree() const { return d_; }
  double poisson_mean() const { return c_; }
  const std::vector<double>& coefficients() const { return coef_; }

  double coefficient(int i) const {
    if (i < 0) return 0.0;
    switch (kind_) {
      case Kind::regular: return i == d_ ? 1.0 : 0.0;
      case Kind::poisson: return std::exp(i * std::log(c_) - c_ - std::lgamma(i + 1.0));
      case Kind::explicit_pmf: return i < static_cast<int>(coef_.size()) ? coef_[i] : 0.0;
    }
    return 0.0;
  }

  double f(double s) const { return derivative(s, 0); }
  double fp(double s) const { return derivative(s, 1); }
  double fpp(double s) const { return derivative(s, 2); }

  // n-th derivative, n <= 2.
  double derivative(double s, int n) const {
    switch (kind_) {
      case Kind::regular: {
        if (n > d_) return 0.0;
        double falling = 1.0;
        for (int k = 0; k < n; ++k) falling *= d_ - k;
        return falling * std::pow(s, d_ - n);
      }
      case Kind::poisson: return std::pow(c_, n) * std::exp(c_ * (s - 1.0));
      case Kind::explicit_pmf: {
        double acc = 0.0;
        for (int i = static_cast<int>(coef_.size()) - 1; i >= n; --i) {
          double falling = 1.0;
          for (int k = 0; k < n; ++k) falling *= i - k;
          acc = acc * s + falling * coef_[i];
        }
        return acc;
      }
    }
    return 0.0;
  }

  // f^{-1}(y) for y in [f(0), 1].
  double inverse(double y) const {
    const double f0 = f(0.0);
    if (!(y >= f0 - 1e-15 && y <= 1.0 + 1e-15)) throw DomainViolation("inverse: argument outside [f(0), 1]");
    if (y >= 1.0) return 1.0;
    if (y <= f0) return 0.0;
    switch (kind_) {
      case Kind::regular: return std::pow(y, 1.0 / d_);
      case Kind::poisson: return 1.0 + std::log(y) / c_;
      case Kind::explicit_pmf: {
        BisectionOptions opt;
        opt.xtol = 1e-16;
        return bisect([&](double s) { return f(s) - y; }, 0.0, 1.0, opt);
      }
    }
    return 0.0;
  }

  double mean() const { return fp(1.0); }

  // Smallest i with pi_i > 0.
  int min_degree() const {
    switch (kind_) {
      case Kind::regular: return d_;
      case Kind::poisson: return 0;
      case Kind::explicit_pmf:
        for (std::size_t i = 0; i < coef_.size(); ++i)
          if (coef_[i] > 0.0) return static_cast<int>(i);
    }
    return 0;
  }

  // 1 - f'(a (1 - t)) / f'(a) for a in (0, 1], t in [0, 1], accurate for small t.
  double derivative_drop(double a, double t) const {
    switch (kind_) {
      case Kind::regular:
        if (d_ < 2) return 0.0;
        return -std::expm1((d_ - 1) * std::log1p(-t));
      case Kind::poisson: return -std::expm1(-c_ * a * t);
      case Kind::explicit_pmf: {
        double num = 0.0;
        double den = coef_.size() > 1 ? coef_[1] : 0.0;
        const double l = std::log1p(-t);
        double power = 1.0;  // a^{i-1}
        for (std::size_t i = 2; i < coef_.size(); ++i) {
          power *= a;
          const double w = static_cast<double>(i) * coef_[i] * power;
          den += w;
          num += w * -std::expm1(static_cast<double>(i - 1) * l);
        }
        return den > 0.0 ? num / den : 0.0;
      }
    }
    return 0.0;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::regular: return "regular:" + std::to_string(d_);
      case Kind::poisson: return "poisson:" + std::to_string(c_);
      case Kind::explicit_pmf: return "explicit";
    }
    return {};
  }

 private:
  Kind kind_ = Kind::explicit_pmf;
  int d_ = 0;
  double c_ = 0.0;
  std::vector<double> coef_;
};

// Size-biased law hat f(s) = f'(s) / f'(1).
class SizeBiased {
 public:
  explicit SizeBiased(GenFn base) : base_(std::move(base)) {
    if (!(base_.fp(1.0) > 0.0)) throw DomainViolation("size-biased law needs a positive mean");
  }
  const GenFn& base() const { return base_; }
  double operator()(double s) const { return base_.fp(s) / base_.fp(1.0); }
  double derivative(double s) const { return base_.fpp(s) / base_.fp(1.0); }
  // hat f'(1), the criticality parameter.
  double criticality() const { return derivative(1.0); }
  // 1 - hat f(1 - rho), accurate for small rho.
  double complement(double rho) const { return base_.derivative_drop(1.0, rho); }

 private:
  GenFn base_;
};

inline constexpr double kRhoLowerBracket = 1e-12;

// Positive root of 1 - rho = hat f(1 - rho) in (0, 1].
inline double solve_rho(const SizeBiased& fhat) {
  if (!(fhat.criticality() > 1.0)) throw Subcritical("subcritical degree law: hat f'(1) = " + std::to_string(fhat.criticality()));
  auto phi = [&](double rho) { return fhat.complement(rho) - rho; };
  double lo = kRhoLowerBracket;
  while (phi(lo) <= 0.0 && lo > 1e-300) lo *= 1e-8;
  if (phi(lo) <= 0.0) throw NumericalFailure("solve_rho: cannot bracket the root");
  BisectionOptions opt;
  opt.xtol = 1e-16;
  return bisect(phi, lo, 1.0, opt);
}

inline double solve_rho(const GenFn& f) { return solve_rho(SizeBiased(f)); }

// Giant component fraction 1 - f(1 - rho).
inline double xi(const GenFn& f, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainViolation("rho must lie in [0, 1]");
  return 1.0 - f.f(1.0 - rho);
}

}  // namespace cmholes
