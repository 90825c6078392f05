#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/explore/serialize.hpp"
#include "cmholes/graph/degree.hpp"
#include "cmholes/theory/genfn.hpp"
#include "cmholes/theory/report.hpp"

namespace cmholes {

enum class Algorithm { induced_dfs, frieze_jackson, m_induced };

inline std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::induced_dfs: return "induced-dfs";
    case Algorithm::frieze_jackson: return "frieze-jackson";
    case Algorithm::m_induced: return "m-induced";
  }
  return {};
}

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "induced-dfs") return Algorithm::induced_dfs;
  if (s == "frieze-jackson") return Algorithm::frieze_jackson;
  if (s == "m-induced") return Algorithm::m_induced;
  throw ConfigError("unknown algorithm '" + s + "' (expected induced-dfs, frieze-jackson or m-induced)");
}

// A parsed --dist value. For file:PATH the degree sequence is kept so that a
// run with the file's own N uses it verbatim.
struct DistributionSpec {
  std::string text;
  DegreeDistribution dist = DegreeDistribution::regular(3);
  std::optional<DegreeSequence> sequence;

  GenFn genfn() const { return GenFn::from_distribution(dist); }
};

inline double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError(what + ": '" + s + "' is not a number");
  }
  if (used != s.size()) throw ConfigError(what + ": '" + s + "' is not a number");
  return v;
}

inline std::int64_t parse_integer(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ConfigError(what + ": '" + s + "' is not an integer");
  }
  if (used != s.size()) throw ConfigError(what + ": '" + s + "' is not an integer");
  return v;
}

// regular:D, poisson:C or file:PATH (one degree per line).
inline DistributionSpec parse_distribution(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("distribution '" + text + "' must look like kind:value");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  DistributionSpec spec;
  spec.text = text;
  try {
    if (kind == "regular") {
      const auto d = parse_integer(arg, "regular degree");
      if (d < 1 || d > kMaxExplicitSupport) throw ConfigError("regular degree out of range");
      spec.dist = DegreeDistribution::regular(static_cast<int>(d));
    } else if (kind == "poisson") {
      spec.dist = DegreeDistribution::poisson(parse_number(arg, "poisson mean"));
    } else if (kind == "file") {
      std::ifstream in(arg);
      if (!in) throw ConfigError("cannot open degree file '" + arg + "'");
      spec.sequence = read_degree_sequence(in);
      spec.dist = DegreeDistribution::empirical(spec.sequence->degrees);
    } else {
      throw ConfigError("unknown distribution kind '" + kind + "'");
    }
  } catch (const DomainViolation& e) {
    throw ConfigError(std::string("invalid distribution: ") + e.what());
  }
  return spec;
}

// "7", "1,3,5" or "1..10" (inclusive), and comma-separated mixtures.
inline std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      const auto v = parse_integer(item, "seed");
      if (v < 0) throw ConfigError("seeds must be nonnegative");
      seeds.push_back(static_cast<std::uint64_t>(v));
      continue;
    }
    const auto lo = parse_integer(item.substr(0, dots), "seed range");
    const auto hi = parse_integer(item.substr(dots + 2), "seed range");
    if (lo < 0 || hi < lo) throw ConfigError("bad seed range '" + item + "'");
    for (auto s = lo; s <= hi; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
  }
  return seeds;
}

inline std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_number(item, "alpha"));
  return out;
}

struct ExperimentConfig {
  std::string dist_text = "regular:3";
  DistributionSpec dist = parse_distribution("regular:3");
  std::optional<std::size_t> n;  // defaults to the file length, else 100000
  std::vector<std::uint64_t> seeds{1};
  Algorithm algorithm = Algorithm::induced_dfs;
  int m = 1;
  double delta = 0.3;
  std::vector<double> alphas{0.1, 0.3};
  double eps = 0.05;
  std::string out;
  unsigned threads = 0;  // 0: hardware concurrency
  Tolerances tol;

  std::size_t n_vertices() const {
    if (n) return *n;
    if (dist.sequence) return dist.sequence->size();
    return 100000;
  }

  // m actually used by the exploration.
  int exploration_m() const { return algorithm == Algorithm::m_induced ? m : 1; }
};

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.n && *cfg.n < 1) throw ConfigError("N must be at least 1");
  if (cfg.seeds.empty()) throw ConfigError("seed list is empty");
  if (cfg.m < 1) throw ConfigError("m must be at least 1");
  if (!(cfg.delta > 0.0 && cfg.delta < 0.5)) throw ConfigError("delta must lie in (0, 1/2)");
  for (double a : cfg.alphas)
    if (!(a >= 0.0 && a < 1.0)) throw ConfigError("alphas must lie in [0, 1)");
  if (!(cfg.eps > 0.0 && cfg.eps <= 1.0)) throw ConfigError("eps must lie in (0, 1]");
  const auto& t = cfg.tol;
  if (!(t.quad_abs > 0.0 && t.quad_rel > 0.0)) throw ConfigError("quadrature tolerances must be positive");
  if (!(t.bound_rho_min > 0.0 && t.profile_rho_min > 0.0)) throw ConfigError("rho floors must be positive");
  if (t.profile_grid < 2) throw ConfigError("profile grid needs at least 2 intervals");
  if (!(t.ode_dt > 0.0 && t.ode_eps >= 0.0)) throw ConfigError("ode dt must be positive and eps nonnegative");
}

inline Json to_json(const ExperimentConfig& cfg) {
  Json j;
  j["dist"] = cfg.dist_text;
  j["n"] = cfg.n_vertices();
  j["seeds"] = cfg.seeds;
  j["algorithm"] = to_string(cfg.algorithm);
  j["m"] = cfg.m;
  j["delta"] = cfg.delta;
  j["alphas"] = cfg.alphas;
  j["eps"] = cfg.eps;
  j["out"] = cfg.out;
  j["tol"] = to_json(cfg.tol);
  return j;
}

// Applies the keys present in a JSON config object; the keys mirror the CLI
// flags. Unknown keys are rejected.
inline void apply_json(ExperimentConfig& cfg, const Json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "dist") {
        cfg.dist_text = v.get<std::string>();
        cfg.dist = parse_distribution(cfg.dist_text);
      } else if (key == "n") {
        const auto n = v.get<std::int64_t>();
        if (n < 1) throw ConfigError("N must be at least 1");
        cfg.n = static_cast<std::size_t>(n);
      } else if (key == "seeds") {
        if (v.is_string()) {
          cfg.seeds = parse_seeds(v.get<std::string>());
        } else if (v.is_number_unsigned()) {
          cfg.seeds = {v.get<std::uint64_t>()};
        } else {
          cfg.seeds = v.get<std::vector<std::uint64_t>>();
        }
      } else if (key == "algorithm") {
        cfg.algorithm = parse_algorithm(v.get<std::string>());
      } else if (key == "m") {
        cfg.m = v.get<int>();
      } else if (key == "delta") {
        cfg.delta = v.get<double>();
      } else if (key == "alphas") {
        cfg.alphas = v.is_string() ? parse_alphas(v.get<std::string>()) : v.get<std::vector<double>>();
      } else if (key == "eps") {
        cfg.eps = v.get<double>();
      } else if (key == "out") {
        cfg.out = v.get<std::string>();
      } else if (key == "threads") {
        cfg.threads = v.get<unsigned>();
      } else if (key == "tol") {
        for (const auto& [tk, tv] : v.items()) {
          if (tk == "quad_abs") cfg.tol.quad_abs = tv.get<double>();
          else if (tk == "quad_rel") cfg.tol.quad_rel = tv.get<double>();
          else if (tk == "bound_rho_min") cfg.tol.bound_rho_min = tv.get<double>();
          else if (tk == "profile_rho_min") cfg.tol.profile_rho_min = tv.get<double>();
          else if (tk == "profile_grid") cfg.tol.profile_grid = tv.get<int>();
          else if (tk == "ode_dt") cfg.tol.ode_dt = tv.get<double>();
          else if (tk == "ode_eps") cfg.tol.ode_eps = tv.get<double>();
          else throw ConfigError("unknown tolerance key '" + tk + "'");
        }
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

inline ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

}  // namespace cmholes
