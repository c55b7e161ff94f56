#include <gtest/gtest.h>

#include "oracles.hpp"
#include "urysohn/eppa.hpp"
#include "urysohn/isometry.hpp"

using namespace urysohn;

namespace {

QuotientBudget budget(int max_omega, std::uint64_t seed = 0) {
  QuotientBudget b;
  b.max_omega = max_omega;
  b.seed = seed;
  return b;
}

}  // namespace

TEST(Eppa, VerifyRejectsBrokenWitness) {
  auto w = oracle::cycle_witness_p4();
  EXPECT_TRUE(verify_witness(w).ok());
  w.extensions.pop_back();
  EXPECT_TRUE(verify_witness(w).has("coverage"));
  auto bad_embed = oracle::cycle_witness_p4();
  bad_embed.embed = {0, 1, 2, 4};
  EXPECT_FALSE(verify_witness(bad_embed).ok());
}

TEST(Eppa, CycleFixtureRestrictsToPath) {
  const auto w = oracle::cycle_witness_p4();
  EXPECT_EQ(w.witness.size(), 7);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(w.witness.d(w.embed[i], w.embed[j]), std::abs(i - j));
  }
  const auto from_action = witness_from_quotient(oracle::cycle_action_p4());
  EXPECT_EQ(from_action.witness.size(), 7);
  EXPECT_TRUE(verify_witness(from_action).ok());
}

TEST(Eppa, EquilateralSpacesAreTheirOwnWitness) {
  for (int n = 1; n <= 4; ++n) {
    const auto outcome = search_witness_quotient(make_uniform(n), budget(8));
    ASSERT_TRUE(outcome.witness);
    EXPECT_EQ(outcome.witness->witness.size(), n);
    EXPECT_TRUE(verify_witness(*outcome.witness).ok());
  }
}

TEST(Eppa, PathSearches) {
  const auto p3 = search_witness_quotient(make_path(3), budget(16));
  ASSERT_TRUE(p3.witness);
  EXPECT_EQ(p3.witness->witness.size(), 4);
  const auto p4 = search_witness_quotient(make_path(4), budget(16, 7));
  ASSERT_TRUE(p4.witness);
  EXPECT_EQ(p4.witness->witness.size(), 6);
  EXPECT_EQ(p4.witness->provenance, Provenance::quotient);
  EXPECT_TRUE(verify_witness(*p4.witness).ok());
}

TEST(Eppa, BruteForceOracleOnP3) {
  BruteForceOptions options;
  options.max_size = 5;
  options.value_set = DistanceValueSet::integers(1);
  options.distance_bound = 2;
  const auto outcome = brute_force_witness(make_path(3), options);
  ASSERT_TRUE(outcome.witness);
  EXPECT_EQ(outcome.witness->witness.size(), 4);
  EXPECT_TRUE(verify_witness(*outcome.witness).ok());
}

TEST(Eppa, BudgetExhaustionIsReported) {
  const auto outcome = search_witness_quotient(make_path(4), budget(5));
  EXPECT_FALSE(outcome.witness);
  EXPECT_FALSE(outcome.stats.note.empty());
}

TEST(Eppa, GraphWitnessesPreserveAdjacency) {
  const SimpleGraph path{4, {{0, 1}, {1, 2}, {2, 3}}};
  const auto gw = graph_eppa(path, budget(32));
  EXPECT_TRUE(verify_witness(gw.metric).ok());
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      EXPECT_EQ(gw.graph.adjacent(gw.metric.embed[u], gw.metric.embed[v]), path.adjacent(u, v));
    }
  }
}

TEST(Eppa, TowerCompatibility) {
  const auto tower = build_tower(make_path(3), 2, budget(16));
  ASSERT_TRUE(tower.failure.empty()) << tower.failure;
  EXPECT_EQ(tower.levels.size(), 3U);
  EXPECT_TRUE(verify_tower(tower).ok());
}

TEST(Eppa, LineWitness) {
  const std::vector<Dist> points{0, 1, 3};
  const auto line = line_witness_search(points, 6, 4);
  if (line) {
    const auto space = make_line(*line);
    std::vector<int> embed;
    for (Dist p : points) embed.push_back(static_cast<int>(std::find(line->begin(), line->end(), p) - line->begin()));
    const auto w = assemble_witness(make_line(points), space, embed, Provenance::manual);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_witness(*w).ok());
  }
}
