#include <gtest/gtest.h>

#include <algorithm>

#include "hidden_topk/dsoe_star.hpp"
#include "hidden_topk/probing.hpp"
#include "hidden_topk/reference.hpp"
#include "test_support.hpp"

namespace hidden_topk {
namespace {

using testing::complete_graph;
using testing::empty_graph;
using testing::explicit_graph;

TEST(SampleSizeTest, LogLog) {
  EXPECT_EQ(loglog_sample_size(0), 0u);
  EXPECT_EQ(loglog_sample_size(1), 1u);
  EXPECT_EQ(loglog_sample_size(2), 1u);
  EXPECT_EQ(loglog_sample_size(15), 1u);   // ln ln 15 = 0.996
  EXPECT_EQ(loglog_sample_size(16), 2u);   // ln ln 16 = 1.020
  EXPECT_EQ(loglog_sample_size(1000), 2u);
  EXPECT_EQ(loglog_sample_size(1619), 3u); // ln ln 1619 = 2.002
  EXPECT_EQ(loglog_sample_size(4000150), 3u);
}

TEST(SampleSizeTest, RulesAndClamping) {
  DsoeStarConfig cfg;
  cfg.sample_size_rule = parse_sample_rule("fixed:50");
  EXPECT_EQ(cfg.sample_size(10), 10u);
  EXPECT_EQ(cfg.sample_size(0), 0u);
  cfg.sample_size_rule = [](VertexId) { return 0u; };
  EXPECT_EQ(cfg.sample_size(10), 1u);
  EXPECT_THROW(parse_sample_rule("fixed:0"), std::invalid_argument);
  EXPECT_THROW(parse_sample_rule("fixed:x"), std::invalid_argument);
  EXPECT_THROW(parse_sample_rule("sqrt"), std::invalid_argument);
  EXPECT_EQ(parse_budget_rule("plus-one")(4), 5u);
  EXPECT_EQ(parse_budget_rule("double-plus-one")(4), 9u);
  EXPECT_THROW(parse_budget_rule("triple"), std::invalid_argument);
}

TEST(PredictTest, CompleteAndEmptyRows) {
  {
    const auto g = complete_graph(1, 5);
    ProbeOracle oracle(g);
    VertexState s;
    predict(s, oracle, 2, 7);
    EXPECT_EQ(s.prediction, 2u);
    EXPECT_EQ(s.s, 2u);
    EXPECT_EQ(oracle.probes(), 2u);
  }
  {
    const auto g = empty_graph(1, 5);
    ProbeOracle oracle(g);
    VertexState s;
    predict(s, oracle, 3, 7);
    EXPECT_EQ(s.prediction, 0u);
    EXPECT_EQ(s.e, 3u);
    EXPECT_FALSE(s.done);
  }
}

TEST(PredictTest, SampleIsDistinctSortedAndSeeded) {
  const auto g = BipartiteGraph::from_edges(1, 10, {{0, 1}, {0, 3}});
  ProbeOracle oracle(g);
  VertexState s;
  predict(s, oracle, 3, 11);
  ASSERT_EQ(s.sampled.size(), 3u);
  EXPECT_TRUE(std::is_sorted(s.sampled.begin(), s.sampled.end()));
  EXPECT_EQ(std::adjacent_find(s.sampled.begin(), s.sampled.end()), s.sampled.end());
  Degree hits = 0;
  for (VertexId w : s.sampled) hits += w == 1 || w == 3;
  EXPECT_EQ(s.prediction, hits);
  EXPECT_EQ(s.s + s.e, 3u);

  VertexState again;
  ProbeOracle oracle2(g);
  predict(again, oracle2, 3, 11);
  EXPECT_EQ(again, s);
}

TEST(PredictTest, FullSampleFinishesVertex) {
  const auto g = explicit_graph();
  ProbeOracle oracle(g);
  VertexState s;
  predict(s, oracle, 4, 0);
  EXPECT_TRUE(s.done);
  EXPECT_EQ(s.s, 3u);
}

TEST(PredictTest, SamplesAreRoughlyUniform) {
  // Every white vertex should be drawn about equally often across seeds.
  const auto g = empty_graph(1, 20);
  std::vector<int> hits(20, 0);
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    ProbeOracle oracle(g);
    VertexState s;
    predict(s, oracle, 3, seed);
    for (VertexId w : s.sampled) ++hits[w];
  }
  // Expected 600 per vertex; allow a wide band.
  for (int h : hits) {
    EXPECT_GT(h, 480);
    EXPECT_LT(h, 720);
  }
}

TEST(PredictionSeedTest, DependsOnlyOnRunSeedAndVertex) {
  EXPECT_EQ(prediction_seed(5, 3), 6u);
  EXPECT_EQ(prediction_seed(0, 17), 17u);
  EXPECT_NE(prediction_seed(1, 2), prediction_seed(1, 3));
}

TEST(StarRoutineTest, StopsAtBudgetNegatives) {
  const auto g = BipartiteGraph::from_edges(1, 6, {{0, 0}, {0, 2}, {0, 4}});
  ProbeOracle oracle(g);
  VertexState s;
  s.sampled = {5};
  s.e = 1;  // w5 was sampled and is not a neighbour
  s.prediction = 0;
  star_routine(s, oracle, ProbeOrder(6), 1);
  EXPECT_EQ(s.s, 1u);
  EXPECT_EQ(s.e, 2u);
  EXPECT_EQ(oracle.probes(), 2u);
  // Next call with budget 1: w2+ w3- .
  star_routine(s, oracle, ProbeOrder(6), 1);
  EXPECT_EQ(s.s, 2u);
  EXPECT_EQ(s.e, 3u);
  // w4+ then the walk skips the sampled w5 and the row is complete.
  star_routine(s, oracle, ProbeOrder(6), 1);
  EXPECT_TRUE(s.done);
  EXPECT_EQ(s.s, 3u);
  EXPECT_EQ(oracle.probes(), 5u);
}

TEST(StarRoutineTest, BudgetLargerThanRowFinishes) {
  const auto g = empty_graph(1, 4);
  ProbeOracle oracle(g);
  VertexState s;
  star_routine(s, oracle, ProbeOrder(4), 100);
  EXPECT_TRUE(s.done);
  EXPECT_EQ(oracle.probes(), 4u);
}

TEST(ExhaustTest, ThresholdZeroProbesEverything) {
  const auto g = BipartiteGraph::from_edges(1, 10, {{0, 0}});
  ProbeOracle oracle(g);
  VertexState s;
  exhaust(s, oracle, ProbeOrder(10), 0);
  EXPECT_TRUE(s.done);
  EXPECT_EQ(oracle.probes(), 10u);
}

TEST(ExhaustTest, ThresholdAboveRowProbesNothing) {
  const auto g = BipartiteGraph::from_edges(1, 10, {{0, 0}});
  ProbeOracle oracle(g);
  VertexState s;
  exhaust(s, oracle, ProbeOrder(10), 11);
  EXPECT_EQ(oracle.probes(), 0u);
}

TEST(ExhaustTest, StopsOnceBelowThreshold) {
  // Upper bound 10 - e drops below 5 at the sixth negative.
  {
    const auto g = BipartiteGraph::from_edges(1, 10, {{0, 0}});
    ProbeOracle oracle(g);
    VertexState s;
    exhaust(s, oracle, ProbeOrder(10), 5);
    EXPECT_EQ(oracle.probes(), 7u);
    EXPECT_FALSE(s.done);
    EXPECT_LT(s.upper_bound(10), 5u);
  }
  {
    const auto g = BipartiteGraph::from_edges(1, 10, {{0, 9}});
    ProbeOracle oracle(g);
    VertexState s;
    exhaust(s, oracle, ProbeOrder(10), 5);
    EXPECT_EQ(oracle.probes(), 6u);
  }
}

TEST(DsoeStarTest, SmallExamples) {
  Executor ex;
  {
    const auto g = complete_graph(2, 3);
    ProbeOracle oracle(g);
    const auto out = dsoe_star_topk(oracle, 1, DsoeStarConfig{}, ex);
    EXPECT_EQ(out.result, brute_force_topk(g, 1));
    EXPECT_EQ(out.probes, 6u);
  }
  {
    const auto g = empty_graph(3, 4);
    ProbeOracle oracle(g);
    const auto out = dsoe_star_topk(oracle, 1, DsoeStarConfig{}, ex);
    EXPECT_EQ(out.result.size(), 3u);
    EXPECT_EQ(out.probes, 12u);
  }
  {
    const auto g = explicit_graph();
    ProbeOracle oracle(g);
    const auto out = dsoe_star_topk(oracle, 1, DsoeStarConfig{}, ex);
    EXPECT_EQ(out.result.entries(), (std::vector<RankedVertex>{{0, 3}}));
    EXPECT_EQ(out.probes, 9u);
    EXPECT_EQ(out.rounds.front().phase, "predict");
    EXPECT_EQ(out.rounds.front().probes, 3u);
  }
}

TEST(DsoeStarTest, ExactAcrossRulesAndSeeds) {
  const auto corpus = testing::random_corpus(60, 99);
  Executor ex(3, Scheduling::kDynamic, 4);
  for (const char* sample : {"loglog", "fixed:1", "fixed:5"}) {
    for (const char* budget : {"plus-one", "double-plus-one"}) {
      for (std::uint64_t seed : {0u, 1u, 2u}) {
        DsoeStarConfig cfg;
        cfg.sample_size_rule = parse_sample_rule(sample);
        cfg.budget_rule = parse_budget_rule(budget);
        cfg.seed = seed;
        for (const auto& inst : corpus) {
          for (std::size_t k : {std::size_t{1}, std::size_t{3}, std::size_t{70}}) {
            ProbeOracle oracle(inst.graph);
            oracle.enable_audit();
            const auto out = dsoe_star_topk(oracle, k, cfg, ex);
            ASSERT_EQ(out.result, brute_force_topk(inst.graph, k))
                << inst.label << " k=" << k << " " << sample << " " << budget
                << " seed=" << seed;
            const auto audit = oracle.audit_report();
            ASSERT_EQ(audit.repeated_pairs, 0u) << inst.label;
            ASSERT_EQ(audit.sandwich_violations, 0u) << inst.label;
            ASSERT_EQ(audit.unsafe_prunes, 0u) << inst.label;
            ASSERT_LE(out.probes,
                      std::uint64_t{inst.graph.n_black()} * inst.graph.n_white());
          }
        }
      }
    }
  }
}

TEST(DsoeStarTest, ShuffledOrderStillExact) {
  const auto g = generate_powerlaw(120, 150, 2.0, 10.0, 4);
  Executor ex(2);
  for (std::uint64_t order_seed : {3u, 4u}) {
    ProbeOracle oracle(g);
    oracle.enable_audit();
    const auto out = dsoe_star_topk(oracle, 5, DsoeStarConfig{}, ex,
                                    ProbeOrder::shuffled(g.n_white(), order_seed));
    EXPECT_EQ(out.result, brute_force_topk(g, 5));
    EXPECT_EQ(oracle.audit_report().repeated_pairs, 0u);
  }
}

TEST(DsoeStarTest, DeterministicAcrossWorkersAndScheduling) {
  const auto g = generate_powerlaw(400, 300, 2.0, 6.0, 17);
  DsoeStarConfig cfg;
  cfg.seed = 12345;
  ProbeOracle base_oracle(g);
  Executor base_ex(1);
  const auto base = dsoe_star_topk(base_oracle, 3, cfg, base_ex);
  for (unsigned workers : {2u, 8u}) {
    for (Scheduling sched : {Scheduling::kStatic, Scheduling::kDynamic}) {
      ProbeOracle oracle(g);
      Executor ex(workers, sched, 5);
      const auto out = dsoe_star_topk(oracle, 3, cfg, ex);
      EXPECT_EQ(out.result, base.result);
      EXPECT_EQ(out.probes, base.probes);
      EXPECT_EQ(out.completion_round, base.completion_round);
    }
  }
}

TEST(DsoeStarTest, PhasesInOrder) {
  const auto g = generate_powerlaw(200, 200, 2.0, 5.0, 2);
  ProbeOracle oracle(g);
  Executor ex;
  const auto out = dsoe_star_topk(oracle, 2, DsoeStarConfig{}, ex);
  ASSERT_GE(out.rounds.size(), 2u);
  EXPECT_EQ(out.rounds.front().phase, "predict");
  EXPECT_EQ(out.rounds.front().probes, 200u * loglog_sample_size(200));
  ProbeCount total = 0;
  for (std::size_t i = 0; i < out.rounds.size(); ++i) {
    total += out.rounds[i].probes;
    if (i > 0 && i + 1 < out.rounds.size()) EXPECT_EQ(out.rounds[i].phase, "routine");
    EXPECT_EQ(out.rounds[i].round, i + 1);
  }
  EXPECT_EQ(total, out.probes);
  if (out.rounds.back().phase == "exhaust") {
    EXPECT_LE(out.rounds.back().threshold, kth_degree(g, 2));
  }
}

TEST(DsoeStarTest, EmptyWhiteSideAndZeroK) {
  Executor ex;
  const auto g = empty_graph(4, 0);
  ProbeOracle oracle(g);
  const auto out = dsoe_star_topk(oracle, 2, DsoeStarConfig{}, ex);
  EXPECT_EQ(out.result, brute_force_topk(g, 2));
  EXPECT_EQ(out.probes, 0u);
  EXPECT_THROW(dsoe_star_topk(oracle, 0, DsoeStarConfig{}, ex), std::invalid_argument);
}

}  // namespace
}  // namespace hidden_topk
