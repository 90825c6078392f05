#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "cmholes/graph/degree.hpp"
#include "cmholes/graph/induced.hpp"
#include "cmholes/graph/multigraph.hpp"
#include "cmholes/explore/remaining.hpp"
#include "oracles.hpp"

using namespace cmholes;

namespace {

MultiGraph path3() { return MultiGraph::from_edges(4, {{1, 2}, {2, 3}}); }
MultiGraph triangle() { return MultiGraph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}}); }

}  // namespace

TEST(DegreeDistribution, RegularPmfAndMoments) {
  const auto d = DegreeDistribution::regular(3);
  EXPECT_DOUBLE_EQ(d.probability(3), 1.0);
  EXPECT_DOUBLE_EQ(d.mean(), 3.0);
  EXPECT_DOUBLE_EQ(d.second_moment(), 9.0);
  EXPECT_TRUE(d.supercritical());
}

TEST(DegreeDistribution, PoissonTruncationIsNormalized) {
  const auto d = DegreeDistribution::poisson(2.0);
  double total = 0.0;
  for (double p : d.pmf()) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
  // Dropped tail mass is below 1e-12.
  double tail = 0.0;
  for (int i = d.max_degree() + 1; i < 200; ++i) tail += std::exp(i * std::log(2.0) - 2.0 - std::lgamma(i + 1.0));
  EXPECT_LT(tail, 1e-12);
  EXPECT_NEAR(d.mean(), 2.0, 1e-10);
  EXPECT_FALSE(DegreeDistribution::poisson(0.5).supercritical());
}

TEST(DegreeDistribution, ExplicitRejectsNegativeEntries) {
  EXPECT_THROW(DegreeDistribution::from_pmf({0.5, -0.1, 0.6}), DomainViolation);
  EXPECT_THROW(DegreeDistribution::regular(0), DomainViolation);
}

TEST(SampleDegreeSequence, RegularFour) {
  std::mt19937_64 rng(1);
  const auto s = sample_degree_sequence(DegreeDistribution::regular(3), 4, rng);
  EXPECT_EQ(s.degrees, (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(s.total_half_edges, 12);
}

TEST(SampleDegreeSequence, OddTotalBumpsLastVertex) {
  std::mt19937_64 rng(1);
  const auto s = sample_degree_sequence(DegreeDistribution::regular(3), 3, rng);
  EXPECT_EQ(s.degrees, (std::vector<int>{3, 3, 4}));
  EXPECT_EQ(s.total_half_edges, 10);
}

TEST(SampleDegreeSequence, PoissonMeanMatchesIndependentSampler) {
  std::mt19937_64 rng(11);
  const auto s = sample_degree_sequence(DegreeDistribution::poisson(2.0), 100000, rng);
  double mean = 0.0;
  for (int d : s.degrees) mean += d;
  mean /= static_cast<double>(s.size());
  EXPECT_NEAR(mean, 2.0, 0.02);
  // Independent oracle: the standard library Poisson sampler on another stream.
  std::mt19937_64 other(12);
  std::poisson_distribution<int> pois(2.0);
  double ref = 0.0;
  for (int i = 0; i < 100000; ++i) ref += pois(other);
  ref /= 100000.0;
  EXPECT_NEAR(mean, ref, 0.03);
}

TEST(DegreeSequence, MaxDegreeDiagnostic) {
  const auto s = DegreeSequence::from_degrees({1, 1, 10, 2});
  EXPECT_FALSE(s.max_degree_within(2.5));
  EXPECT_TRUE(s.max_degree_within(0.5));
}

TEST(DegreeSequence, ReadWriteRoundTrip) {
  const auto s = DegreeSequence::from_degrees({3, 0, 2, 1});
  std::stringstream ss;
  write_degree_sequence(ss, s);
  EXPECT_EQ(ss.str(), "3\n0\n2\n1\n");
  const auto back = read_degree_sequence(ss);
  EXPECT_EQ(back.degrees, s.degrees);
  std::stringstream bad("3\nx\n");
  EXPECT_THROW(read_degree_sequence(bad), ConfigError);
}

TEST(ConfigurationModel, TwoLeavesGiveTheUniqueEdge) {
  std::mt19937_64 rng(3);
  const auto g = build_configuration_model(DegreeSequence::from_degrees({1, 1}), rng);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges().front(), (std::pair<VertexId, VertexId>{0, 1}));
}

TEST(ConfigurationModel, DegreeTwoSingleVertexIsASelfLoop) {
  std::mt19937_64 rng(3);
  const auto g = build_configuration_model(DegreeSequence::from_degrees({2}), rng);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges().front(), (std::pair<VertexId, VertexId>{0, 0}));
}

TEST(ConfigurationModel, OddTotalRejected) {
  std::mt19937_64 rng(3);
  DegreeSequence s;
  s.degrees = {1, 2};
  s.total_half_edges = 3;
  EXPECT_THROW(build_configuration_model(s, rng), DomainViolation);
}

TEST(ConfigurationModel, FourLeavesMatchingsAreUniform) {
  const auto seq = DegreeSequence::from_degrees({1, 1, 1, 1});
  std::map<std::vector<HalfEdgeId>, int> counts;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    std::mt19937_64 rng(s);
    counts[oracle::pairing_of(build_configuration_model(seq, rng))]++;
  }
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [p, c] : counts) EXPECT_NEAR(c / 10000.0, 1.0 / 3.0, 0.02);
}

TEST(ConfigurationModel, SmallSequencesUniformInTotalVariation) {
  for (const auto& degrees : std::vector<std::vector<int>>{{2, 1, 1}, {3, 1, 2, 2}, {2, 2, 2, 2}, {1, 3, 0, 4}}) {
    const auto seq = DegreeSequence::from_degrees(degrees);
    const auto all = oracle::all_matchings(static_cast<std::size_t>(seq.total_half_edges));
    std::map<std::vector<HalfEdgeId>, int> counts;
    const int runs = 100000;
    for (int s = 0; s < runs; ++s) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(s));
      counts[oracle::pairing_of(build_configuration_model(seq, rng))]++;
    }
    std::vector<double> p, q;
    for (const auto& m : all) {
      p.push_back(counts.count(m) ? counts[m] / static_cast<double>(runs) : 0.0);
      q.push_back(1.0 / static_cast<double>(all.size()));
    }
    EXPECT_EQ(counts.size(), all.size());
    EXPECT_LT(total_variation(p, q), 0.02);
  }
}

TEST(ConfigurationModel, InvolutionAndDegreeConsistency) {
  std::mt19937_64 rng(5);
  const auto seq = sample_degree_sequence(DegreeDistribution::poisson(3.0), 5000, rng);
  const auto g = build_configuration_model(seq, rng);
  EXPECT_TRUE(g.is_involution());
  for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
    const auto hh = static_cast<HalfEdgeId>(h);
    ASSERT_EQ(g.partner(g.partner(hh)), hh);
    ASSERT_NE(g.partner(hh), hh);
  }
  for (std::size_t v = 0; v < seq.size(); ++v) ASSERT_EQ(g.degree(static_cast<VertexId>(v)), seq.degrees[v]);
}

TEST(ErGraph, ProbabilityAboveOneRejected) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(build_er_graph(2, 4.0, rng), DomainViolation);
}

TEST(ErGraph, ProbabilityOneIsComplete) {
  std::mt19937_64 rng(1);
  const auto g = build_er_graph(3, 3.0, rng);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.adjacent(0, 1) && g.adjacent(1, 2) && g.adjacent(0, 2));
}

TEST(ErGraph, EdgeCountWithinThreeSigma) {
  std::mt19937_64 rng(9);
  const std::size_t n = 100000;
  const auto g = build_er_graph(n, 2.0, rng);
  const double pairs = n * (n - 1) / 2.0;
  const double p = 2.0 / n;
  EXPECT_NEAR(static_cast<double>(g.num_edges()), pairs * p, 3.0 * std::sqrt(pairs * p * (1 - p)));
  for (auto [u, v] : g.edges()) ASSERT_NE(u, v);
}

TEST(EdgeList, RoundTrip) {
  const auto g = MultiGraph::from_edges(3, {{0, 1}, {2, 2}, {0, 1}});
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(ss.str(), "0 1\n0 1\n2 2\n");
  const auto back = read_edge_list(ss, 3);
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(InducedPath, PathGraph) {
  const auto g = path3();
  EXPECT_TRUE(is_induced_path(g, std::vector<VertexId>{1, 2, 3}));
}

TEST(InducedPath, TriangleHasChord) {
  const auto g = triangle();
  EXPECT_FALSE(is_induced_path(g, std::vector<VertexId>{1, 2, 3}));
}

TEST(InducedPath, RepeatsAndMultiEdges) {
  const auto g = MultiGraph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}});
  EXPECT_TRUE(is_induced_path(g, std::vector<VertexId>{0, 1, 2}));
  EXPECT_FALSE(is_induced_path(g, std::vector<VertexId>{0, 1, 0}));
}

TEST(InducedPath, AgreesWithAdjacencyMatrixOracle) {
  std::mt19937_64 rng(21);
  int agreed = 0, positives = 0;
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(30, 35, rng);
    const auto vs = oracle::random_list(g, 2 + t % 6, rng);
    const bool want = oracle::induced_path(g, vs);
    ASSERT_EQ(is_induced_path(g, vs), want);
    agreed++;
    positives += want;
  }
  EXPECT_EQ(agreed, 200);
  EXPECT_GT(positives, 10);
}

TEST(InducedCycle, Triangle) {
  const auto g = triangle();
  EXPECT_TRUE(is_induced_cycle(g, std::vector<VertexId>{1, 2, 3}));
}

TEST(InducedCycle, FourCycleWithChord) {
  const auto g = MultiGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_FALSE(is_induced_cycle(g, std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_FALSE(is_induced_cycle(g, std::vector<VertexId>{0, 1}));
}

TEST(InducedCycle, AgreesWithAdjacencyMatrixOracle) {
  std::mt19937_64 rng(22);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    const auto g = oracle::random_graph(12, 14, rng);
    auto vs = oracle::random_list(g, 3 + t % 4, rng);
    const bool want = oracle::induced_cycle(g, vs);
    ASSERT_EQ(is_induced_cycle(g, vs), want);
    positives += want;
  }
  EXPECT_GT(positives, 0);
}

TEST(MInduced, OneIsInducedOnRandomInstances) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto g = oracle::random_graph(15, 18, rng);
    const auto vs = oracle::random_list(g, 3 + t % 5, rng);
    ASSERT_EQ(is_m_induced_cycle(g, vs, 1), is_induced_cycle(g, vs));
    ASSERT_EQ(is_m_induced_path(g, vs, 1), is_induced_path(g, vs));
  }
}

TEST(MInduced, SixCycleWithSharedOutsideNeighbour) {
  // Antipodal vertices 0 and 3 share neighbour 6: graph distance 2 at cycle distance 3.
  const auto g = MultiGraph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {3, 6}});
  const std::vector<VertexId> c{0, 1, 2, 3, 4, 5};
  EXPECT_TRUE(is_induced_cycle(g, c));
  EXPECT_TRUE(is_m_induced_cycle(g, c, 2));   // 2 >= min(2, 3)
  EXPECT_FALSE(is_m_induced_cycle(g, c, 3));  // 2 < min(3, 3)
}

TEST(MInduced, AgreesWithAllPairsBfsOracle) {
  std::mt19937_64 rng(24);
  int positives = 0;
  for (int t = 0; t < 400; ++t) {
    const auto g = oracle::random_graph(25, 22, rng);
    const auto vs = oracle::random_list(g, 3 + t % 5, rng);
    const int m = 1 + t % 4;
    const bool cyclic = t % 2 == 0;
    const bool want = oracle::m_separated(g, vs, m, cyclic);
    ASSERT_EQ(cyclic ? is_m_induced_cycle(g, vs, m) : is_m_induced_path(g, vs, m), want) << "trial " << t;
    positives += want;
  }
  EXPECT_GT(positives, 10);
  EXPECT_THROW(is_m_induced_path(path3(), std::vector<VertexId>{1, 2}, 0), DomainViolation);
}
