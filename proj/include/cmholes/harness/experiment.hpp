#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cmholes/explore/cycle_closing.hpp"
#include "cmholes/explore/frieze_jackson.hpp"
#include "cmholes/explore/induced_dfs.hpp"
#include "cmholes/explore/remaining.hpp"
#include "cmholes/explore/serialize.hpp"
#include "cmholes/graph/induced.hpp"
#include "cmholes/harness/config.hpp"
#include "cmholes/harness/profile_distance.hpp"
#include "cmholes/theory/profile.hpp"
#include "cmholes/theory/report.hpp"
#include "cmholes/version.hpp"

namespace cmholes {

struct SeedRow {
  std::uint64_t seed = 0;
  double max_height = 0.0;     // / N
  double spine_length = 0.0;   // / N, for the configured algorithm
  bool spine_valid = false;    // induced (m-induced for m > 1) path oracle
  std::optional<bool> cycle_found;
  std::size_t cycle_length = 0;
  bool cycle_valid = true;
  std::map<double, std::optional<double>> tv;  // alpha -> TV, none if not reached
  std::optional<double> profile_distance;
  double support_end = 0.0;  // / N
  std::optional<double> fj_agreement;
  std::int64_t contour_steps = 0;
};

struct Aggregate {
  double mean = 0.0, stddev = 0.0, min = 0.0, max = 0.0;
  std::size_t count = 0;
};

inline Aggregate aggregate(const std::vector<double>& xs) {
  Aggregate a;
  a.count = xs.size();
  if (xs.empty()) return a;
  a.min = *std::min_element(xs.begin(), xs.end());
  a.max = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double x : xs) s += x;
  a.mean = s / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double q = 0.0;
    for (double x : xs) q += (x - a.mean) * (x - a.mean);
    a.stddev = std::sqrt(q / static_cast<double>(xs.size() - 1));
  }
  return a;
}

struct ComparisonReport {
  ExperimentConfig config;
  std::optional<TheoryReport> theory;
  std::vector<std::string> warnings;
  std::vector<SeedRow> rows;

  // Aggregates are recomputed from the rows on demand.
  std::map<std::string, Aggregate> aggregates() const {
    std::map<std::string, std::vector<double>> cols;
    for (const auto& r : rows) {
      cols["max_height"].push_back(r.max_height);
      cols["spine_length"].push_back(r.spine_length);
      cols["support_end"].push_back(r.support_end);
      if (r.profile_distance) cols["profile_distance"].push_back(*r.profile_distance);
      if (r.fj_agreement) cols["fj_agreement"].push_back(*r.fj_agreement);
      if (r.cycle_found) cols["cycle_found"].push_back(*r.cycle_found ? 1.0 : 0.0);
      for (const auto& [a, v] : r.tv)
        if (v) cols["tv_alpha_" + format_alpha(a)].push_back(*v);
    }
    std::map<std::string, Aggregate> out;
    for (const auto& [k, v] : cols) out[k] = aggregate(v);
    return out;
  }

  static std::string format_alpha(double a) {
    std::ostringstream os;
    os << a;
    return os.str();
  }
};

inline Json to_json(const Aggregate& a) {
  return Json{{"mean", a.mean}, {"stddev", a.stddev}, {"min", a.min}, {"max", a.max}, {"count", a.count}};
}

inline Json to_json(const SeedRow& r) {
  Json j;
  j["seed"] = r.seed;
  j["max_height"] = r.max_height;
  j["spine_length"] = r.spine_length;
  j["spine_valid"] = r.spine_valid;
  j["cycle_found"] = r.cycle_found ? Json(*r.cycle_found) : Json(nullptr);
  j["cycle_length"] = r.cycle_length;
  j["cycle_valid"] = r.cycle_valid;
  Json tv = Json::object();
  for (const auto& [a, v] : r.tv) tv[ComparisonReport::format_alpha(a)] = v ? Json(*v) : Json(nullptr);
  j["tv"] = tv;
  j["profile_distance"] = r.profile_distance ? Json(*r.profile_distance) : Json(nullptr);
  j["support_end"] = r.support_end;
  j["fj_agreement"] = r.fj_agreement ? Json(*r.fj_agreement) : Json(nullptr);
  j["contour_steps"] = r.contour_steps;
  return j;
}

inline Json to_json(const ComparisonReport& rep) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["config"] = to_json(rep.config);
  j["tolerances"] = to_json(rep.config.tol);
  j["theory"] = rep.theory ? to_json(*rep.theory) : Json(nullptr);
  j["warnings"] = rep.warnings;
  Json rows = Json::array();
  for (const auto& r : rep.rows) rows.push_back(to_json(r));
  j["per_seed"] = std::move(rows);
  Json agg = Json::object();
  for (const auto& [k, a] : rep.aggregates()) agg[k] = to_json(a);
  j["aggregate"] = std::move(agg);
  return j;
}

// Writes to PATH.tmp, then renames over PATH.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline DegreeSequence sequence_for_seed(const ExperimentConfig& cfg, std::mt19937_64& rng) {
  const std::size_t n = cfg.n_vertices();
  if (cfg.dist.sequence && cfg.dist.sequence->size() == n) return *cfg.dist.sequence;
  return sample_degree_sequence(cfg.dist.dist, n, rng);
}

// One seeded exploration: the degree sequence and the exploration draw from
// the same mt19937_64 stream seeded with `seed`.
inline ExplorationResult simulate_seed(const ExperimentConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto seq = sequence_for_seed(cfg, rng);
  ExplorationOptions opts;
  opts.delta = cfg.delta;
  auto res = run_m_induced_dfs(seq, cfg.exploration_m(), rng, opts);
  res.seed = seed;
  return res;
}

struct TheoryContext {
  std::optional<FluidModel> model;
  std::optional<ProfileCurve> profile;
};

inline SeedRow evaluate_seed(const ExperimentConfig& cfg, const TheoryContext& th, const ExplorationResult& res) {
  SeedRow row;
  row.seed = res.seed;
  const double n = static_cast<double>(res.n_vertices);
  row.max_height = res.max_height() / n;
  row.contour_steps = static_cast<std::int64_t>(res.contour.steps());
  const int m = cfg.exploration_m();
  std::vector<VertexId> spine = res.spine;
  if (cfg.algorithm == Algorithm::frieze_jackson && !res.spine.empty()) {
    const auto rank = push_order(res);
    spine = run_frieze_jackson(res.graph, res.spine.front(), rank);
    row.fj_agreement = prefix_agreement(spine, res.spine);
  }
  row.spine_length = static_cast<double>(spine.size()) / n;
  row.spine_valid = m == 1 ? is_induced_path(res.graph, spine) : is_m_induced_path(res.graph, spine, m);
  if (m == 1) {
    const auto cycle = close_induced_cycle(res, cfg.eps);
    row.cycle_found = cycle.has_value();
    if (cycle) {
      row.cycle_length = cycle->size();
      row.cycle_valid = is_induced_cycle(res.graph, *cycle);
    }
  }
  row.support_end = static_cast<double>(contour_support_end(res.contour)) / n;
  for (double a : cfg.alphas) {
    std::optional<double> tv;
    if (th.model && a <= th.model->alpha_c()) {
      try {
        const auto hist = remaining_degree_histogram(res, a);
        const int i_max = std::max<int>(static_cast<int>(hist.size()) - 1, cfg.dist.dist.max_degree());
        tv = total_variation(hist, th.model->g_coefficients(a, i_max));
      } catch (const DomainViolation&) {
      }
    }
    row.tv[a] = tv;
  }
  if (th.profile && m == 1) row.profile_distance = profile_distance(res, *th.profile);
  return row;
}

inline TheoryContext build_theory(const ExperimentConfig& cfg, ComparisonReport& rep) {
  TheoryContext th;
  try {
    const GenFn f = cfg.dist.genfn();
    std::vector<int> ms{1};
    if (cfg.exploration_m() > 1) ms.push_back(cfg.exploration_m());
    rep.theory = compute_theory(f, ms, cfg.tol);
    th.model.emplace(f);
    if (cfg.exploration_m() == 1) th.profile = profile(*th.model, cfg.tol.profile_options());
  } catch (const Subcritical& e) {
    rep.warnings.push_back(std::string("Subcritical: ") + e.what());
  }
  return th;
}

// Runs every seed on a worker pool. Rows come back in seed-list order and
// `on_result` (if given) sees each exploration under a lock.
template <class OnResult>
ComparisonReport run_experiment(const ExperimentConfig& cfg, OnResult&& on_result) {
  validate(cfg);
  ComparisonReport rep;
  rep.config = cfg;
  const TheoryContext th = build_theory(cfg, rep);
  rep.rows.resize(cfg.seeds.size());
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cfg.seeds.size()));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfg.seeds.size()) return;
      try {
        const auto res = simulate_seed(cfg, cfg.seeds[i]);
        rep.rows[i] = evaluate_seed(cfg, th, res);
        std::lock_guard lock(mu);
        on_result(i, res);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = cfg.seeds.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rep;
}

inline ComparisonReport run_experiment(const ExperimentConfig& cfg) {
  return run_experiment(cfg, [](std::size_t, const ExplorationResult&) {});
}

// run_experiment plus artifacts in cfg.out: report.json and one contour CSV per seed.
inline ComparisonReport run_experiment_to_disk(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  auto rep = run_experiment(cfg, [&](std::size_t, const ExplorationResult& res) {
    std::ostringstream csv;
    write_contour_csv(csv, res.contour);
    write_file_atomic(dir / ("contour_seed" + std::to_string(res.seed) + ".csv"), csv.str());
  });
  write_file_atomic(dir / "report.json", to_json(rep).dump(2) + "\n");
  return rep;
}

}  // namespace cmholes
