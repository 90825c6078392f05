#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/graph/degree.hpp"
#include "cmholes/theory/rootfind.hpp"

namespace cmholes {

struct OdeOptions {
  double dt = 1e-4;
  // Integration stops once the criticality functional drops to 1 + eps.
  double eps = 0.01;
  double t_max = 50.0;
};

// Fluid limit of the sleeping-degree counts along ladder times:
// z_i(t) ~ N_i(tN) / N, z(t) ~ T_{tN} / N, z_tilde(t) ~ w(tN) / N.
struct OdeTrajectory {
  std::vector<double> t;
  std::vector<std::vector<double>> z_i;  // z_i[step][i]
  std::vector<double> z;
  std::vector<double> z_tilde;
  std::vector<double> rho;
  std::vector<double> criticality;
  double t_stop = 0.0;
  std::string stop_reason;
  double z_tilde_initial = 0.0;
  // The initial value stated alongside the z_tilde equation; recorded, not used.
  double z_tilde_initial_stated = 1.0;

  std::size_t size() const { return t.size(); }

  // Linear interpolation of z_i at time s in [0, t_stop].
  double z_at(std::size_t i, double s) const { return interpolate(s, [&](std::size_t k) { return i < z_i[k].size() ? z_i[k][i] : 0.0; }); }
  double z_contour_at(double s) const { return interpolate(s, [&](std::size_t k) { return z[k]; }); }
  double z_tilde_at(double s) const { return interpolate(s, [&](std::size_t k) { return z_tilde[k]; }); }

 private:
  template <class F>
  double interpolate(double s, F&& value) const {
    if (t.empty()) throw DomainViolation("empty trajectory");
    if (s <= t.front()) return value(0);
    if (s >= t.back()) return value(t.size() - 1);
    const double dt = t[1] - t[0];
    auto k = static_cast<std::size_t>(s / dt);
    if (k + 1 >= t.size()) k = t.size() - 2;
    const double w = (s - t[k]) / (t[k + 1] - t[k]);
    return (1.0 - w) * value(k) + w * value(k + 1);
  }
};

namespace ode_detail {

struct Moments {
  double m1 = 0.0;  // sum j z_j
  double m2 = 0.0;  // sum j (j - 1) z_j
  double criticality() const { return m2 / m1; }
};

inline Moments moments(const std::vector<double>& z) {
  Moments mo;
  for (std::size_t j = 1; j < z.size(); ++j) {
    const double zj = std::max(z[j], 0.0);
    mo.m1 += static_cast<double>(j) * zj;
    mo.m2 += static_cast<double>(j * (j - 1)) * zj;
  }
  return mo;
}

// Positive root rho of 1 - rho = hat g(1 - rho) for the law proportional to z.
inline double rho_of(const std::vector<double>& z) {
  const Moments mo = moments(z);
  if (!(mo.m1 > 0.0) || !(mo.criticality() > 1.0)) throw Subcritical("coefficient family is not supercritical");
  auto phi = [&](double rho) {
    const double l = std::log1p(-rho);
    double num = 0.0;
    for (std::size_t i = 2; i < z.size(); ++i)
      num += static_cast<double>(i) * std::max(z[i], 0.0) * -std::expm1(static_cast<double>(i - 1) * l);
    return num / mo.m1 - rho;
  };
  double lo = 1e-12;
  while (phi(lo) <= 0.0 && lo > 1e-300) lo *= 1e-8;
  if (phi(lo) <= 0.0) throw Subcritical("cannot bracket rho for the coefficient family");
  BisectionOptions opt;
  opt.xtol = 1e-16;
  return bisect(phi, lo, 1.0, opt);
}

}  // namespace ode_detail

// Drift of z_i written term by term:
// -(1/rho) q_i + (1/rho)(L - 1)(-q_i + L (q_{i+1} - q_i)),
// q_i = i z_i / sum_j j z_j, L = sum_j j (j - 1) z_j / sum_j j z_j.
inline std::vector<double> degree_drift(const std::vector<double>& z, double rho) {
  const auto mo = ode_detail::moments(z);
  const double lam = mo.criticality();
  auto q = [&](std::size_t i) { return i < z.size() ? static_cast<double>(i) * std::max(z[i], 0.0) / mo.m1 : 0.0; };
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    out[i] = -q(i) / rho + (lam - 1.0) / rho * (-q(i) + lam * (q(i + 1) - q(i)));
  return out;
}

// The same drift in factored form (L / rho)(-L q_i + (L - 1) q_{i+1}).
inline std::vector<double> degree_drift_factored(const std::vector<double>& z, double rho) {
  const auto mo = ode_detail::moments(z);
  const double lam = mo.criticality();
  auto q = [&](std::size_t i) { return i < z.size() ? static_cast<double>(i) * std::max(z[i], 0.0) / mo.m1 : 0.0; };
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = lam / rho * (-lam * q(i) + (lam - 1.0) * q(i + 1));
  return out;
}

// Classical RK4 on (z_0..z_K, z, z_tilde) with z' = (2 - rho) / rho and
// z_tilde' = L / rho; rho is re-solved at every stage.
inline OdeTrajectory integrate_ode_system(const DegreeDistribution& dist, const OdeOptions& opt = {}) {
  if (!(opt.dt > 0.0) || !(opt.eps >= 0.0)) throw DomainViolation("dt must be positive and eps nonnegative");
  if (!dist.supercritical()) throw Subcritical("degree law is not supercritical");
  const std::size_t k = dist.pmf().size();
  std::vector<double> y(k + 2, 0.0);
  for (std::size_t i = 0; i < k; ++i) y[i] = dist.pmf()[i];

  auto rhs = [&](const std::vector<double>& s, double& rho_out) {
    std::vector<double> zi(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
    const double rho = ode_detail::rho_of(zi);
    rho_out = rho;
    auto d = degree_drift(zi, rho);
    d.push_back((2.0 - rho) / rho);
    d.push_back(ode_detail::moments(zi).criticality() / rho);
    return d;
  };

  OdeTrajectory tr;
  auto record = [&](double t, const std::vector<double>& s, double rho) {
    tr.t.push_back(t);
    tr.z_i.emplace_back(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
    tr.z.push_back(s[k]);
    tr.z_tilde.push_back(s[k + 1]);
    tr.rho.push_back(rho);
    tr.criticality.push_back(ode_detail::moments(tr.z_i.back()).criticality());
  };

  double rho0 = 0.0;
  rhs(y, rho0);
  record(0.0, y, rho0);
  const double dt = opt.dt;
  std::vector<double> tmp(y.size());
  for (long step = 1;; ++step) {
    if (tr.criticality.back() <= 1.0 + opt.eps) {
      tr.stop_reason = "criticality reached 1 + eps";
      break;
    }
    const double t = static_cast<double>(step) * dt;
    if (t > opt.t_max) {
      tr.stop_reason = "t_max reached";
      break;
    }
    std::vector<double> k1, k2, k3, k4;
    double r = 0.0;
    try {
      k1 = rhs(y, r);
      for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
      k2 = rhs(tmp, r);
      for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
      k3 = rhs(tmp, r);
      for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + dt * k3[i];
      k4 = rhs(tmp, r);
    } catch (const Subcritical&) {
      tr.stop_reason = "stage left the supercritical region";
      break;
    }
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    for (std::size_t i = 0; i < k; ++i)
      if (y[i] < -1e-10) throw NumericalFailure("z_" + std::to_string(i) + " became negative at t = " + std::to_string(t));
    double rho = 0.0;
    try {
      rhs(y, rho);
    } catch (const Subcritical&) {
      tr.stop_reason = "left the supercritical region";
      break;
    }
    record(t, y, rho);
  }
  tr.t_stop = tr.t.back();
  return tr;
}

}  // namespace cmholes
