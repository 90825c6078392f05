#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmholes/error.hpp"
#include "cmholes/explore/serialize.hpp"
#include "cmholes/harness/config.hpp"
#include "cmholes/harness/experiment.hpp"
#include "cmholes/theory/profile.hpp"
#include "cmholes/theory/report.hpp"
#include "cmholes/version.hpp"

namespace {

using namespace cmholes;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Raw flag values; only the ones given on the command line override the config file.
struct Flags {
  std::string config;
  std::string dist;
  std::optional<std::int64_t> n;
  std::optional<std::string> seeds;
  std::string algorithm;
  std::vector<int> m;
  std::optional<double> delta;
  std::string alphas;
  std::optional<double> eps;
  std::string out;
  std::optional<unsigned> threads;
  std::optional<double> quad_abs, quad_rel, bound_rho_min, profile_rho_min, ode_dt, ode_eps;
  std::optional<int> profile_grid;
  std::string format = "csv";
};

void add_tolerance_flags(CLI::App* app, Flags& f) {
  app->add_option("--tol-quad-abs", f.quad_abs, "Absolute quadrature tolerance");
  app->add_option("--tol-quad-rel", f.quad_rel, "Relative quadrature tolerance");
  app->add_option("--tol-bound-rho-min", f.bound_rho_min, "Lower rho floor of the bound integral");
  app->add_option("--tol-profile-rho-min", f.profile_rho_min, "Lower rho floor of the profile curve");
  app->add_option("--tol-profile-grid", f.profile_grid, "Number of profile grid intervals");
  app->add_option("--tol-ode-dt", f.ode_dt, "ODE step size");
  app->add_option("--tol-ode-eps", f.ode_eps, "ODE stop margin above criticality one");
}

void add_common_flags(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "JSON config file; flags given here win");
  app->add_option("--dist", f.dist, "regular:D | poisson:C | file:PATH");
  app->add_option("--out", f.out, "Output path");
  add_tolerance_flags(app, f);
}

void add_simulation_flags(CLI::App* app, Flags& f) {
  app->add_option("--n", f.n, "Number of vertices");
  app->add_option("--seeds", f.seeds, "Seeds: 7, 1,2,3 or 1..10");
  app->add_option("--algorithm", f.algorithm, "induced-dfs | frieze-jackson | m-induced");
  app->add_option("--delta", f.delta, "Ladder window exponent in (0, 1/2)");
  app->add_option("--alphas", f.alphas, "Comma-separated alpha probes");
  app->add_option("--eps", f.eps, "Cycle closing window");
  app->add_option("--threads", f.threads, "Worker threads (0: all cores)");
}

ExperimentConfig resolve(const Flags& f) {
  ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : load_config_file(f.config);
  if (!f.dist.empty()) {
    cfg.dist_text = f.dist;
    cfg.dist = parse_distribution(f.dist);
  }
  if (f.n) {
    if (*f.n < 1) throw ConfigError("N must be at least 1");
    cfg.n = static_cast<std::size_t>(*f.n);
  }
  if (f.seeds) cfg.seeds = parse_seeds(*f.seeds);
  if (!f.algorithm.empty()) cfg.algorithm = parse_algorithm(f.algorithm);
  if (!f.m.empty()) {
    cfg.m = f.m.back();
    // An explicit m > 1 without an algorithm selects the m-induced exploration.
    if (f.algorithm.empty() && cfg.m > 1) cfg.algorithm = Algorithm::m_induced;
  }
  if (f.delta) cfg.delta = *f.delta;
  if (!f.alphas.empty()) cfg.alphas = parse_alphas(f.alphas);
  if (f.eps) cfg.eps = *f.eps;
  if (!f.out.empty()) cfg.out = f.out;
  if (f.threads) cfg.threads = *f.threads;
  if (f.quad_abs) cfg.tol.quad_abs = *f.quad_abs;
  if (f.quad_rel) cfg.tol.quad_rel = *f.quad_rel;
  if (f.bound_rho_min) cfg.tol.bound_rho_min = *f.bound_rho_min;
  if (f.profile_rho_min) cfg.tol.profile_rho_min = *f.profile_rho_min;
  if (f.profile_grid) cfg.tol.profile_grid = *f.profile_grid;
  if (f.ode_dt) cfg.tol.ode_dt = *f.ode_dt;
  if (f.ode_eps) cfg.tol.ode_eps = *f.ode_eps;
  validate(cfg);
  return cfg;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(path, content);
  }
}

int cmd_theory(const Flags& f) {
  const auto cfg = resolve(f);
  std::vector<int> ms{1};
  for (int m : f.m) {
    if (m < 1) throw ConfigError("m must be at least 1");
    if (m != 1) ms.push_back(m);
  }
  const auto report = compute_theory(cfg.dist.genfn(), ms, cfg.tol);
  Json j = to_json(report);
  j["tool_version"] = kToolVersion;
  j["config"] = to_json(cfg);
  j["tolerances"] = to_json(cfg.tol);
  emit(cfg.out, j.dump(2) + "\n");
  return 0;
}

int cmd_simulate(const Flags& f) {
  const auto cfg = resolve(f);
  if (cfg.seeds.size() != 1) throw ConfigError("simulate takes exactly one seed");
  const auto res = simulate_seed(cfg, cfg.seeds.front());
  Json j;
  j["tool_version"] = kToolVersion;
  j["config"] = to_json(cfg);
  j["tolerances"] = to_json(cfg.tol);
  j["result"] = to_json(res);
  if (cfg.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  namespace fs = std::filesystem;
  std::ostringstream csv;
  write_contour_csv(csv, res.contour);
  write_file_atomic(fs::path(cfg.out) / "simulation.json", j.dump(2) + "\n");
  write_file_atomic(fs::path(cfg.out) / "contour.csv", csv.str());
  return 0;
}

int cmd_compare(const Flags& f) {
  const auto cfg = resolve(f);
  const auto rep = cfg.out.empty() ? run_experiment(cfg) : run_experiment_to_disk(cfg);
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  if (cfg.out.empty()) std::cout << to_json(rep).dump(2) << "\n";
  return 0;
}

int cmd_profile(const Flags& f) {
  const auto cfg = resolve(f);
  const auto curve = profile(FluidModel(cfg.dist.genfn()), cfg.tol.profile_options());
  if (f.format == "json") {
    Json j;
    j["tool_version"] = kToolVersion;
    j["config"] = to_json(cfg);
    j["tolerances"] = to_json(cfg.tol);
    j["profile"] = to_json(curve);
    emit(cfg.out, j.dump(2) + "\n");
  } else if (f.format == "csv") {
    std::ostringstream os;
    write_profile_csv(os, curve);
    emit(cfg.out, os.str());
  } else {
    throw ConfigError("unknown format '" + f.format + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced paths in configuration-model graphs: simulation and fluid-limit theory"};
  app.set_version_flag("--version", std::string(cmholes::kToolVersion));
  app.require_subcommand(1);
  Flags flags;

  auto* theory = app.add_subcommand("theory", "Fixed points, alpha_c and the path-length bounds as JSON");
  add_common_flags(theory, flags);
  theory->add_option("--m", flags.m, "Neighbourhood depths for the m-bound (repeatable)");

  auto* simulate = app.add_subcommand("simulate", "One seeded exploration as JSON");
  add_common_flags(simulate, flags);
  add_simulation_flags(simulate, flags);
  simulate->add_option("--m", flags.m, "Neighbourhood depth");

  auto* compare = app.add_subcommand("compare", "Replicated simulations against theory");
  add_common_flags(compare, flags);
  add_simulation_flags(compare, flags);
  compare->add_option("--m", flags.m, "Neighbourhood depth");

  auto* prof = app.add_subcommand("profile", "Limit contour profile");
  add_common_flags(prof, flags);
  prof->add_option("--format", flags.format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*theory) return cmd_theory(flags);
    if (*simulate) return cmd_simulate(flags);
    if (*compare) return cmd_compare(flags);
    if (*prof) return cmd_profile(flags);
  } catch (const cmholes::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const cmholes::DomainViolation& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const cmholes::Subcritical& e) {
    std::cerr << "numerical failure: subcritical: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const cmholes::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
