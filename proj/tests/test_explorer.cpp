#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "cmholes/explore/contour.hpp"
#include "cmholes/explore/cycle_closing.hpp"
#include "cmholes/explore/frieze_jackson.hpp"
#include "cmholes/explore/induced_dfs.hpp"
#include "cmholes/explore/remaining.hpp"
#include "cmholes/explore/serialize.hpp"
#include "cmholes/graph/induced.hpp"
#include "cmholes/theory/fluid.hpp"
#include "oracles.hpp"

using namespace cmholes;

namespace {

ExplorationResult explore(const DegreeSequence& seq, std::uint64_t seed, int m = 1, ExplorationOptions opts = {}) {
  std::mt19937_64 rng(seed);
  auto res = run_m_induced_dfs(seq, m, rng, opts);
  res.seed = seed;
  return res;
}

ExplorationResult explore_dist(const DegreeDistribution& d, std::size_t n, std::uint64_t seed, int m = 1) {
  std::mt19937_64 rng(seed);
  const auto seq = sample_degree_sequence(d, n, rng);
  return run_m_induced_dfs(seq, m, rng);
}

std::vector<std::int32_t> heights_of(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(InducedDfs, TwoLeaves) {
  const auto res = explore(DegreeSequence::from_degrees({1, 1}), 4);
  EXPECT_EQ(res.contour.heights, heights_of({0, 1, 2, 1, 0}));
  EXPECT_EQ(res.spine.size(), 2u);
  EXPECT_TRUE(is_induced_path(res.graph, res.spine));
  EXPECT_EQ(extract_longest_induced_path(res), res.spine);
}

TEST(InducedDfs, IsolatedVertices) {
  const auto res = explore(DegreeSequence::from_degrees({0, 0, 0}), 4);
  EXPECT_EQ(res.contour.heights, heights_of({0, 1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(res.max_height(), 1);
  EXPECT_EQ(res.roots.size(), 3u);
  for (auto e : res.contour.events) EXPECT_NE(e, StepKind::advance);
}

TEST(InducedDfs, EmptySequence) {
  std::mt19937_64 rng(1);
  const auto res = run_induced_dfs(DegreeSequence{}, rng);
  EXPECT_TRUE(res.empty());
  EXPECT_THROW(extract_longest_induced_path(res), DomainViolation);
}

TEST(InducedDfs, RegularThreeMaxHeightNearFluidLimit) {
  for (std::uint64_t seed : {1, 2}) {
    const auto res = explore_dist(DegreeDistribution::regular(3), 100000, seed);
    const double h = res.max_height() / 1e5;
    EXPECT_GE(h, 0.42);
    EXPECT_LE(h, 0.50);
  }
}

TEST(InducedDfs, SpinePassesOracleOnRandomSeeds) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto d = seed % 2 ? DegreeDistribution::regular(3) : DegreeDistribution::poisson(3.0);
    const auto res = explore_dist(d, 300, seed);
    const auto spine = extract_longest_induced_path(res);
    ASSERT_EQ(static_cast<std::int32_t>(spine.size()), res.max_height());
    ASSERT_TRUE(oracle::induced_path(res.graph, spine)) << "seed " << seed;
  }
}

TEST(InducedDfs, ContourShapeAndEveryVertexPushedOnce) {
  const auto res = explore_dist(DegreeDistribution::poisson(2.5), 5000, 3);
  const auto& x = res.contour.heights;
  ASSERT_EQ(x.size(), 2 * res.n_vertices + 1);
  EXPECT_EQ(x.front(), 0);
  EXPECT_EQ(x.back(), 0);
  std::size_t ups = 0;
  for (std::size_t n = 1; n < x.size(); ++n) {
    ASSERT_EQ(std::abs(x[n] - x[n - 1]), 1);
    ASSERT_GE(x[n], 0);
    ups += x[n] > x[n - 1];
  }
  EXPECT_EQ(ups, res.n_vertices);
  for (auto s : res.push_state) EXPECT_GE(s, 0);
}

TEST(InducedDfs, PartitionInvariantHoldsAfterEveryStep) {
  ExplorationOptions opts;
  opts.check_invariants = true;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    std::mt19937_64 rng(seed);
    const auto seq = sample_degree_sequence(DegreeDistribution::poisson(2.0), 300, rng);
    EXPECT_NO_THROW(run_induced_dfs(seq, rng, opts));
    EXPECT_NO_THROW(run_m_induced_dfs(seq, 2, rng, opts));
  }
}

TEST(InducedDfs, Deterministic) {
  std::mt19937_64 r(5);
  const auto seq = sample_degree_sequence(DegreeDistribution::poisson(2.0), 3000, r);
  const auto a = explore(seq, 77);
  const auto b = explore(seq, 77);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(a.graph.edges(), b.graph.edges());
}

TEST(InducedDfs, PairingLawMatchesConfigurationModel) {
  for (const auto& degrees : std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 1, 1}, {3, 1, 2, 2}, {1, 3, 0, 4}}) {
    const auto seq = DegreeSequence::from_degrees(degrees);
    const auto all = oracle::all_matchings(static_cast<std::size_t>(seq.total_half_edges));
    std::map<std::vector<HalfEdgeId>, int> counts;
    const int runs = 100000;
    ExplorationOptions opts;
    opts.record_snapshots = false;
    for (int s = 0; s < runs; ++s) counts[oracle::pairing_of(explore(seq, static_cast<std::uint64_t>(s), 1, opts).graph)]++;
    std::vector<double> p, q;
    for (const auto& m : all) {
      p.push_back(counts.count(m) ? counts[m] / static_cast<double>(runs) : 0.0);
      q.push_back(1.0 / static_cast<double>(all.size()));
    }
    EXPECT_EQ(counts.size(), all.size());
    EXPECT_LT(total_variation(p, q), 0.02);
  }
}

TEST(Ladder, HandExample) {
  const auto t = ladder_times_with_window(heights_of({0, 1, 0, 1, 2, 1, 0}), 1);
  EXPECT_EQ(t, (std::vector<std::int64_t>{0, 3}));
}

TEST(Ladder, MonotoneStaircase) {
  const int n = 200;
  std::vector<std::int32_t> x;
  for (int k = 0; k <= n; ++k) x.push_back(k);
  for (int k = n - 1; k >= 0; --k) x.push_back(k);
  const std::int64_t w = 15;
  const auto t = ladder_times_with_window(x, w);
  ASSERT_GE(static_cast<std::int64_t>(t.size()), n - w);
  for (std::int64_t k = 0; k < n - w; ++k) EXPECT_EQ(t[k], k);
}

TEST(Ladder, RandomContoursIncreasingAndHitHeight) {
  const auto res = explore_dist(DegreeDistribution::regular(3), 20000, 8);
  const auto t = compute_ladder_times(res.contour, 0.3);
  ASSERT_GT(t.size(), 10u);
  EXPECT_EQ(t.front(), 0);
  for (std::size_t k = 1; k < t.size(); ++k) {
    ASSERT_GT(t[k], t[k - 1]);
    ASSERT_EQ(res.contour.heights[t[k]], static_cast<std::int32_t>(k));
  }
  ASSERT_EQ(res.ladder_times.size(), t.size());
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_EQ(res.ladder_times[k].time, t[k]);
}

TEST(Ladder, WindowDomain) {
  EXPECT_EQ(ladder_window(100000, 0.3), static_cast<std::int64_t>(std::floor(std::pow(1e5, 0.3))));
  EXPECT_THROW(ladder_window(10, 0.5), DomainViolation);
  EXPECT_THROW(ladder_window(10, 0.0), DomainViolation);
}

TEST(Snapshots, SumToSleepingSetAndComplementW) {
  const auto res = explore_dist(DegreeDistribution::poisson(2.0), 20000, 4);
  ASSERT_EQ(res.snapshots.size(), res.ladder_times.size());
  ASSERT_EQ(res.w.size(), res.snapshots.size());
  for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
    std::int64_t total = 0;
    for (auto c : res.snapshots[k]) total += c;
    const std::int64_t state = k == 0 ? 0 : res.ladder_times[k].time - 1;
    ASSERT_EQ(total, res.sleeping.size_at(state));
    ASSERT_EQ(res.w[k] + total, static_cast<std::int64_t>(res.n_vertices));
  }
}

TEST(FriezeJackson, PathGraph) {
  const auto g = MultiGraph::from_edges(4, {{1, 2}, {2, 3}});
  const std::vector<std::int64_t> rank{0, 1, 2, 3};
  EXPECT_EQ(run_frieze_jackson(g, 1, rank), (std::vector<VertexId>{1, 2, 3}));
}

TEST(FriezeJackson, TriangleDeletesThirdVertex) {
  const auto g = MultiGraph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}});
  const std::vector<std::int64_t> rank{0, 1, 2, 3};
  EXPECT_EQ(run_frieze_jackson(g, 1, rank).size(), 2u);
  EXPECT_THROW(run_frieze_jackson(g, 9, rank), DomainViolation);
}

TEST(FriezeJackson, ParallelEdgeToParentAndLoopsDoNotDelete) {
  const auto g = MultiGraph::from_edges(3, {{0, 1}, {0, 1}, {1, 1}, {1, 2}});
  const std::vector<std::int64_t> rank{0, 1, 2};
  EXPECT_EQ(run_frieze_jackson(g, 0, rank), (std::vector<VertexId>{0, 1, 2}));
}

TEST(FriezeJackson, SpinePassesOracleAndTracksInducedDfs) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto res = explore_dist(DegreeDistribution::regular(3), 400, seed);
    const auto fj = run_frieze_jackson(res.graph, res.spine.front(), push_order(res));
    ASSERT_TRUE(oracle::induced_path(res.graph, fj));
    EXPECT_GE(prefix_agreement(fj, res.spine), 0.0);
  }
}

TEST(FriezeJackson, PrefixAgreement) {
  const std::vector<VertexId> ref{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(prefix_agreement(std::vector<VertexId>{1, 2, 9}, ref), 0.5);
  EXPECT_DOUBLE_EQ(prefix_agreement(ref, ref), 1.0);
}

TEST(MInducedDfs, MOneReproducesInducedDfs) {
  std::mt19937_64 r(6);
  const auto seq = sample_degree_sequence(DegreeDistribution::poisson(2.0), 5000, r);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 a(seed), b(seed);
    const auto x = run_induced_dfs(seq, a);
    const auto y = run_m_induced_dfs(seq, 1, b);
    ASSERT_EQ(x.contour.heights, y.contour.heights);
    ASSERT_EQ(x.spine, y.spine);
  }
}

TEST(MInducedDfs, MTwoSpinesAreTwoInduced) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto res = explore_dist(DegreeDistribution::regular(3), 10000, seed, 2);
    ASSERT_TRUE(is_m_induced_path(res.graph, res.spine, 2)) << "seed " << seed;
  }
}

TEST(MInducedDfs, SmallInstancesAgreeWithBfsOracle) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto res = explore_dist(DegreeDistribution::regular(3), 200, seed, 2);
    ASSERT_TRUE(oracle::m_separated(res.graph, res.spine, 2, false)) << "seed " << seed;
  }
}

TEST(CycleClosing, Lollipop) {
  // Spine 0..9; u = 10 hangs off 9, u' = 11 joins 10 and 1.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < 9; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(9, 10);
  edges.emplace_back(10, 11);
  edges.emplace_back(11, 1);
  ExplorationResult res;
  res.n_vertices = 12;
  res.graph = MultiGraph::from_edges(12, edges);
  for (VertexId v = 0; v < 10; ++v) res.spine.push_back(v);
  const auto cycle = close_induced_cycle(res, 0.3);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(*cycle, (std::vector<VertexId>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
  EXPECT_TRUE(oracle::induced_cycle(res.graph, *cycle));
}

TEST(CycleClosing, ShortSpineGivesNothing) {
  const auto res = explore(DegreeSequence::from_degrees({1, 1}), 1);
  EXPECT_FALSE(close_induced_cycle(res, 0.5).has_value());
  EXPECT_THROW(close_induced_cycle(res, 0.0), DomainViolation);
}

TEST(CycleClosing, ReturnedCyclesAreInduced) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto res = explore_dist(DegreeDistribution::regular(3), 2000, seed);
    if (const auto c = close_induced_cycle(res, 0.1)) ASSERT_TRUE(oracle::induced_cycle(res.graph, *c));
  }
}

TEST(RemainingDegrees, AlphaZeroIsInputHistogram) {
  std::mt19937_64 r(7);
  const auto seq = sample_degree_sequence(DegreeDistribution::poisson(2.0), 5000, r);
  const auto res = explore(seq, 3);
  const auto h = remaining_degree_histogram(res, 0.0);
  std::vector<double> want(static_cast<std::size_t>(seq.max_degree()) + 1, 0.0);
  for (int d : seq.degrees) want[d] += 1.0 / 5000.0;
  EXPECT_LT(total_variation(h, want), 1e-12);
}

TEST(RemainingDegrees, RegularThreeMatchesFluidCoefficients) {
  const auto res = explore_dist(DegreeDistribution::regular(3), 100000, 2);
  const FluidModel model(GenFn::regular(3));
  EXPECT_LT(total_variation(remaining_degree_histogram(res, 0.3), model.g_coefficients(0.3, 3)), 0.02);
}

TEST(RemainingDegrees, PoissonMatchesFluidCoefficients) {
  const auto res = explore_dist(DegreeDistribution::poisson(2.0), 100000, 2);
  const FluidModel model(GenFn::poisson(2.0));
  const auto h = remaining_degree_histogram(res, 0.3);
  EXPECT_LT(total_variation(h, model.g_coefficients(0.3, static_cast<int>(h.size()) + 20)), 0.02);
}

TEST(RemainingDegrees, UnreachedAlphaThrows) {
  const auto res = explore(DegreeSequence::from_degrees({1, 1}), 1);
  EXPECT_THROW(remaining_degree_histogram(res, 0.99), DomainViolation);
  EXPECT_THROW(tau(res, 1.0), DomainViolation);
}

TEST(Serialize, RunLengthRoundTripAndCsv) {
  const auto res = explore_dist(DegreeDistribution::poisson(2.0), 2000, 5);
  const auto back = contour_from_runs(contour_runs(res.contour));
  EXPECT_EQ(back.heights, res.contour.heights);
  std::ostringstream csv;
  write_contour_csv(csv, res.contour);
  EXPECT_EQ(csv.str().rfind("step,height\n", 0), 0u);
  const auto j = to_json(res);
  for (const char* key : {"n_vertices", "seed", "contour", "spine", "ladder_times", "snapshots", "w"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Serialize, CsvDownsampledBelowRowCap) {
  ContourProcess c;
  for (int k = 0; k < 300000; ++k) c.heights.push_back(k % 2);
  c.events.resize(c.heights.size() - 1, StepKind::advance);
  std::ostringstream csv;
  write_contour_csv(csv, c, 1000);
  std::size_t lines = 0;
  for (char ch : csv.str()) lines += ch == '\n';
  EXPECT_LE(lines, 1001u);
}
