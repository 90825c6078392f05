#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmholes/explore/serialize.hpp"
#include "cmholes/theory/bounds.hpp"
#include "cmholes/theory/fluid.hpp"
#include "cmholes/theory/ode.hpp"
#include "cmholes/theory/profile.hpp"

namespace cmholes {

// Every numerical tolerance the theory side uses, overridable from the CLI.
struct Tolerances {
  double quad_abs = 1e-13;
  double quad_rel = 1e-11;
  double bound_rho_min = 1e-6;
  double profile_rho_min = 1e-4;
  int profile_grid = 400;
  double ode_dt = 1e-4;
  double ode_eps = 0.01;

  BoundOptions bound_options() const { return {bound_rho_min, {quad_abs, quad_rel, 20000}}; }
  ProfileOptions profile_options() const {
    return {profile_grid, profile_rho_min, {quad_abs, std::max(quad_rel, 1e-10), 20000}};
  }
  OdeOptions ode_options() const { return {ode_dt, ode_eps, 50.0}; }
};

inline Json to_json(const Tolerances& t) {
  Json j;
  j["quad_abs"] = t.quad_abs;
  j["quad_rel"] = t.quad_rel;
  j["bound_rho_min"] = t.bound_rho_min;
  j["profile_rho_min"] = t.profile_rho_min;
  j["profile_grid"] = t.profile_grid;
  j["ode_dt"] = t.ode_dt;
  j["ode_eps"] = t.ode_eps;
  return j;
}

struct TheoryReport {
  std::string distribution;
  double rho_pi = 0.0;
  double xi = 0.0;
  double alpha_c = 0.0;
  double L = 0.0;
  double L_signed = 0.0;
  double L_error = 0.0;
  std::map<int, double> L_m;
  std::map<std::string, double> closed_forms;
};

inline TheoryReport compute_theory(const GenFn& f, const std::vector<int>& ms, const Tolerances& tol = {}) {
  const FluidModel model(f);
  TheoryReport r;
  r.distribution = f.describe();
  r.rho_pi = model.rho_pi();
  r.xi = model.xi();
  r.alpha_c = model.alpha_c();
  const auto main = bound_m(model, 1, tol.bound_options());
  r.L = main.value;
  r.L_signed = main.signed_value;
  r.L_error = main.error;
  for (int m : ms) r.L_m[m] = m == 1 ? r.L : bound_m(model, m, tol.bound_options()).value;
  if (f.kind() == GenFn::Kind::regular && f.regular_degree() >= 3) {
    r.closed_forms["regular"] = bound_regular(f.regular_degree());
  } else if (f.kind() == GenFn::Kind::poisson) {
    r.closed_forms["er_display"] = bound_er(f.poisson_mean());
    r.closed_forms["er_exponential_integral"] = bound_er_exponential_integral(f.poisson_mean());
  }
  return r;
}

inline Json to_json(const TheoryReport& r) {
  Json j;
  j["distribution"] = r.distribution;
  j["rho_pi"] = r.rho_pi;
  j["xi"] = r.xi;
  j["alpha_c"] = r.alpha_c;
  j["L"] = r.L;
  j["L_signed"] = r.L_signed;
  j["L_quadrature_error"] = r.L_error;
  j["sign_convention"] =
      "alpha decreases in rho, so the integral as written is negative; L is its absolute value";
  Json lm = Json::object();
  for (auto [m, v] : r.L_m) lm[std::to_string(m)] = v;
  j["L_m"] = lm;
  Json cf = Json::object();
  for (const auto& [k, v] : r.closed_forms) cf[k] = v;
  j["closed_forms"] = cf;
  j["z_tilde_initial"] = {{"used", 0.0}, {"stated", 1.0}};
  return j;
}

inline Json to_json(const ProfileCurve& c) {
  Json j;
  j["rho_pi"] = c.rho_pi;
  j["xi"] = c.xi;
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back({p.rho, p.x_up, p.y_up, p.x_down, p.y_down});
  j["columns"] = {"rho", "x_up", "y_up", "x_down", "y_down"};
  j["points"] = std::move(pts);
  return j;
}

}  // namespace cmholes
