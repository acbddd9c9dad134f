#include <gtest/gtest.h>

#include <chrono>
#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hidden_topk/generators.hpp"
#include "hidden_topk/graph.hpp"
#include "hidden_topk/probe_oracle.hpp"
#include "hidden_topk/vertex_state.hpp"
#include "test_support.hpp"

namespace hidden_topk {
namespace {

using testing::complete_graph;
using testing::empty_graph;
using testing::explicit_graph;

TEST(ProbeTest, EmptyGraphAnswersFalseAndCounts) {
  const auto g = empty_graph(1, 1);
  ProbeOracle oracle(g);
  EXPECT_EQ(oracle.probes(), 0u);
  EXPECT_FALSE(oracle.probe(0, 0));
  EXPECT_EQ(oracle.probes(), 1u);
}

TEST(ProbeTest, CompleteK11) {
  const auto g = complete_graph(1, 1);
  ProbeOracle oracle(g);
  EXPECT_TRUE(oracle.probe(0, 0));
}

TEST(ProbeTest, ExplicitGraph) {
  const auto g = explicit_graph();
  ProbeOracle oracle(g);
  EXPECT_TRUE(oracle.probe(2, 1));
  EXPECT_FALSE(oracle.probe(2, 3));
  EXPECT_EQ(oracle.probes(), 2u);
}

TEST(ProbeTest, OutOfRangeIdsRejected) {
  const auto g = explicit_graph();
  ProbeOracle oracle(g);
  EXPECT_THROW(oracle.probe(3, 0), IdRangeError);
  EXPECT_THROW(oracle.probe(0, 4), IdRangeError);
  EXPECT_EQ(oracle.probes(), 0u);
}

TEST(ProbeTest, PurityAndCounterExactness) {
  const auto g = generate_random(20, 30, 0.3, 9);
  ProbeOracle oracle(g);
  oracle.enable_audit();
  std::mt19937 rng(4);
  std::uint64_t calls = 0;
  for (int i = 0; i < 2000; ++i) {
    const VertexId b = rng() % 20;
    const VertexId w = rng() % 30;
    const bool first = oracle.probe(b, w);
    const bool second = oracle.probe(b, w);
    calls += 2;
    ASSERT_EQ(first, second);
    ASSERT_EQ(first, g.has_edge(b, w));
  }
  EXPECT_EQ(oracle.probes(), calls);
  EXPECT_EQ(oracle.audit_report().invocations, calls);
  EXPECT_GE(oracle.audit_report().repeated_pairs, calls / 2);
}

TEST(ProbeTest, DelayIsHonoured) {
  const auto g = complete_graph(1, 4);
  ProbeOracle oracle(g, std::chrono::microseconds(2000));
  const auto start = std::chrono::steady_clock::now();
  for (VertexId w = 0; w < 4; ++w) oracle.probe(0, w);
  EXPECT_GE(std::chrono::steady_clock::now() - start, std::chrono::microseconds(8000));
}

TEST(ProbeTest, AuditDetectsSandwichViolation) {
  const auto g = explicit_graph();
  ProbeOracle oracle(g);
  oracle.enable_audit();
  VertexState ok{.vertex = 0, .s = 2, .e = 1};
  oracle.audit_state(ok);
  EXPECT_EQ(oracle.audit_report().sandwich_violations, 0u);
  VertexState too_many_hits{.vertex = 1, .s = 2, .e = 0};
  oracle.audit_state(too_many_hits);
  VertexState too_many_misses{.vertex = 0, .s = 0, .e = 2};  // d=3 > 4-2
  oracle.audit_state(too_many_misses);
  EXPECT_EQ(oracle.audit_report().sandwich_violations, 2u);
  oracle.audit_pruned(0, 3);
  oracle.audit_pruned(1, 3);
  EXPECT_EQ(oracle.audit_report().unsafe_prunes, 1u);
}

TEST(TrueDegreeTest, Examples) {
  EXPECT_EQ(true_degree(empty_graph(2, 3), 1), 0u);
  const auto k23 = complete_graph(2, 3);
  EXPECT_EQ(true_degree(k23, 0), 3u);
  EXPECT_EQ(true_degree(k23, 1), 3u);
  const auto g = explicit_graph();
  EXPECT_EQ(true_degree(g, 0), 3u);
  EXPECT_THROW(true_degree(g, 3), IdRangeError);
}

TEST(TrueDegreeTest, DoesNotTouchProbeCounter) {
  const auto g = explicit_graph();
  ProbeOracle oracle(g);
  (void)true_degree(g, 0);
  EXPECT_EQ(oracle.probes(), 0u);
}

TEST(GraphTest, InvariantsHold) {
  for (const auto& inst : testing::random_corpus(40, 17)) {
    const auto& g = inst.graph;
    std::uint64_t sum = 0;
    for (VertexId b = 0; b < g.n_black(); ++b) {
      const auto nbrs = g.neighbors(b);
      sum += nbrs.size();
      EXPECT_LE(nbrs.size(), g.n_white());
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        EXPECT_LT(nbrs[i], g.n_white());
        if (i > 0) EXPECT_LT(nbrs[i - 1], nbrs[i]) << inst.label;
      }
    }
    EXPECT_EQ(sum, g.edge_count()) << inst.label;
  }
}

TEST(GraphTest, FromEdgesDeduplicatesAndRejectsBadIds) {
  std::size_t dups = 0;
  const auto g = BipartiteGraph::from_edges(2, 2, {{0, 1}, {0, 1}, {1, 0}}, &dups);
  EXPECT_EQ(dups, 1u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(BipartiteGraph::from_edges(2, 2, {{2, 0}}), IdRangeError);
  EXPECT_THROW(BipartiteGraph::from_adjacency(2, {{0, 5}}), IdRangeError);
}

TEST(GenerateRandomTest, Extremes) {
  EXPECT_EQ(generate_random(3, 4, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(generate_random(3, 4, 1.0, 1).edge_count(), 12u);
  EXPECT_THROW(generate_random(3, 4, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(generate_random(3, 4, -0.1, 1), std::invalid_argument);
}

TEST(GenerateRandomTest, DeterministicPerSeed) {
  const auto a = generate_random(50, 50, 0.1, 7);
  const auto b = generate_random(50, 50, 0.1, 7);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edge_count(), b.edge_count());
  EXPECT_NE(a, generate_random(50, 50, 0.1, 8));
}

TEST(GenerateRandomTest, DensityIsPlausible) {
  const auto g = generate_random(200, 200, 0.25, 3);
  const double density = static_cast<double>(g.edge_count()) / (200.0 * 200.0);
  EXPECT_NEAR(density, 0.25, 0.02);
}

TEST(GeneratePowerlawTest, ZeroMeanIsEmpty) {
  const auto g = generate_powerlaw(10, 10, 2.5, 0.0, 1);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.n_black(), 10u);
}

TEST(GeneratePowerlawTest, TruncationForcesMaximum) {
  const auto g = generate_powerlaw(1, 10, 2.5, 10.0, 5);
  EXPECT_EQ(g.degree(0), 10u);
}

TEST(GeneratePowerlawTest, EmpiricalMeanNearTarget) {
  // Exponent 2 is heavy-tailed (per-row sd ~ 40 at n_w = 1000), so average
  // over many rows: the standard error here is about 0.3.
  const auto g = generate_powerlaw(20000, 1000, 2.0, 5.0, 1);
  const double mean = static_cast<double>(g.edge_count()) / 20000.0;
  EXPECT_NEAR(mean, 5.0, 1.0);
  const auto h = generate_powerlaw(20000, 200, 3.0, 2.0, 2);
  EXPECT_NEAR(static_cast<double>(h.edge_count()) / 20000.0, 2.0, 0.1);
}

TEST(GeneratePowerlawTest, CalibrationMatchesTarget) {
  // Bisection target and closed-form expectation agree.
  EXPECT_NEAR(powerlaw_expected_degree(10, 2.5, 10.0), 10.0, 1e-12);
  EXPECT_NEAR(powerlaw_expected_degree(4, 2.0, 1.0), 1.0 + 0.5 + 1.0 / 3 + 0.25, 1e-12);
}

TEST(GeneratePowerlawTest, RejectsBadParameters) {
  EXPECT_THROW(generate_powerlaw(5, 5, 1.0, 2.0, 1), std::invalid_argument);
  EXPECT_THROW(generate_powerlaw(5, 5, 2.0, 6.0, 1), std::invalid_argument);
}

TEST(GeneratePowerlawTest, DeterministicAndSkewed) {
  const auto a = generate_powerlaw(500, 400, 2.0, 8.0, 42);
  EXPECT_EQ(a, generate_powerlaw(500, 400, 2.0, 8.0, 42));
  std::vector<Degree> degrees;
  for (VertexId b = 0; b < a.n_black(); ++b) degrees.push_back(a.degree(b));
  std::sort(degrees.begin(), degrees.end());
  // Heavy tail: the maximum is far above the median.
  EXPECT_GT(degrees.back(), 10 * std::max<Degree>(1, degrees[degrees.size() / 2]));
}

TEST(CloneTest, SingleEdge) {
  const std::vector<UndirectedEdge> e{{0, 1}};
  const auto g = clone_to_bipartite(2, e);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(CloneTest, EmptyInput) {
  const auto g = clone_to_bipartite(0, {});
  EXPECT_EQ(g.n_black(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(CloneTest, TriangleAndDegreePreservation) {
  const std::vector<UndirectedEdge> tri{{0, 1}, {1, 2}, {0, 2}};
  const auto g = clone_to_bipartite(3, tri);
  for (VertexId b = 0; b < 3; ++b) EXPECT_EQ(g.degree(b), 2u);

  std::mt19937 rng(8);
  std::vector<UndirectedEdge> edges;
  std::vector<std::set<VertexId>> nbrs(30);
  for (int i = 0; i < 120; ++i) {
    const VertexId u = rng() % 30;
    const VertexId v = rng() % 30;
    if (u == v) continue;
    edges.push_back({u, v});
    nbrs[u].insert(v);
    nbrs[v].insert(u);
  }
  const auto c = clone_to_bipartite(30, edges);
  for (VertexId i = 0; i < 30; ++i) EXPECT_EQ(c.degree(i), nbrs[i].size());
}

TEST(CloneTest, SelfLoopRejectedDuplicatesCollapsed) {
  const std::vector<UndirectedEdge> loop{{1, 1}};
  EXPECT_THROW(clone_to_bipartite(2, loop), std::invalid_argument);
  const std::vector<UndirectedEdge> dup{{0, 1}, {1, 0}, {0, 1}};
  EXPECT_EQ(clone_to_bipartite(2, dup).edge_count(), 2u);
}

TEST(SwapSidesTest, Involution) {
  for (const auto& inst : testing::random_corpus(30, 5)) {
    const auto t = swap_sides(inst.graph);
    EXPECT_EQ(t.edge_count(), inst.graph.edge_count());
    EXPECT_EQ(swap_sides(t), inst.graph) << inst.label;
  }
}

TEST(SwapSidesTest, K23BecomesK32) {
  const auto t = swap_sides(complete_graph(2, 3));
  EXPECT_EQ(t.n_black(), 3u);
  EXPECT_EQ(t.n_white(), 2u);
  for (VertexId b = 0; b < 3; ++b) EXPECT_EQ(t.degree(b), 2u);
}

TEST(SwapSidesTest, MaxWhiteDegreeBecomesMaxBlackDegree) {
  // A small stand-in for a DBLP-shaped instance: the largest black degree
  // shows up as the largest white degree after the swap and back again.
  const auto g = generate_powerlaw(300, 120, 2.2, 4.0, 11);
  const auto t = swap_sides(g);
  std::vector<Degree> white_degree(g.n_white(), 0);
  for (const Edge& e : g.edges()) ++white_degree[e.white];
  EXPECT_EQ(t.max_degree(), *std::max_element(white_degree.begin(), white_degree.end()));
  EXPECT_EQ(swap_sides(t).max_degree(), g.max_degree());
}

TEST(ProbeOrderTest, ShuffledIsAPermutation) {
  const auto order = ProbeOrder::shuffled(50, 3);
  std::vector<VertexId> seen;
  for (std::uint32_t i = 0; i < 50; ++i) seen.push_back(order.at(i));
  std::sort(seen.begin(), seen.end());
  std::vector<VertexId> expected(50);
  std::iota(expected.begin(), expected.end(), 0);
  EXPECT_EQ(seen, expected);
  EXPECT_FALSE(order.is_identity());
  EXPECT_TRUE(ProbeOrder(5).is_identity());
}

}  // namespace
}  // namespace hidden_topk
