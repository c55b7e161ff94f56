#include <gtest/gtest.h>

#include "oracles.hpp"
#include "urysohn/envelope.hpp"
#include "urysohn/epsilon_net.hpp"
#include "urysohn/isometry.hpp"
#include "urysohn/partial_isometry.hpp"
#include "urysohn/permutation.hpp"

using namespace urysohn;

TEST(ValueSet, FiniteIncludesZeroAndConvexity) {
  const auto vs = DistanceValueSet::finite({1, 2});
  EXPECT_TRUE(vs.contains(0));
  EXPECT_TRUE(vs.contains(2));
  EXPECT_FALSE(vs.contains(3));
  EXPECT_TRUE(vs.is_convex());
  EXPECT_FALSE(DistanceValueSet::finite({1, 3}).is_convex());
  EXPECT_EQ(vs.members_between(1, 5), (std::vector<Dist>{1, 2}));
}

TEST(ValueSet, IntegersRespectScaleAndBound) {
  const auto vs = DistanceValueSet::integers(2, 6);
  EXPECT_TRUE(vs.contains(4));
  EXPECT_FALSE(vs.contains(3));
  EXPECT_FALSE(vs.contains(8));
  EXPECT_EQ(vs.members_between(1, 10), (std::vector<Dist>{2, 4, 6}));
}

TEST(MetricSpace, ValidationReportsEveryViolation) {
  const DistanceMatrix bad{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}};
  const auto report = validate_space(bad, 1, DistanceValueSet::scaled());
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(report.has("triangle"));
  EXPECT_EQ(report.violations().front().witness.size(), 3U);
  EXPECT_THROW(FiniteMetricSpace(bad, DistanceValueSet::scaled()), InvalidSpace);

  const DistanceMatrix asym{{0, 1}, {2, 0}};
  EXPECT_TRUE(validate_space(asym, 1, DistanceValueSet::scaled()).has("symmetry"));
  const DistanceMatrix zero{{0, 0}, {0, 0}};
  EXPECT_TRUE(validate_space(zero, 1, DistanceValueSet::scaled()).has("positivity"));
  const DistanceMatrix off{{0, 3}, {3, 0}};
  EXPECT_TRUE(validate_space(off, 1, DistanceValueSet::finite({1, 2})).has("value"));
  EXPECT_THROW(validate_space({{0, 1}}, 1, DistanceValueSet::scaled()), InvalidInput);
}

TEST(MetricSpace, FactoriesAndAccessors) {
  const auto p4 = make_path(4);
  EXPECT_EQ(p4.size(), 4);
  EXPECT_EQ(p4.d(0, 3), 3);
  EXPECT_EQ(p4.diameter(), 3);
  EXPECT_EQ(p4.min_positive_distance(), 1);
  EXPECT_EQ(p4.profile(0), (std::vector<Dist>{0, 1, 2, 3}));
  const std::vector<int> sub{1, 3};
  EXPECT_EQ(p4.subspace(sub).d(0, 1), 2);
  EXPECT_EQ(make_uniform(3, 2).d(0, 2), 2);
  const std::vector<Dist> coords{0, 2, 7};
  EXPECT_EQ(make_line(coords).d(1, 2), 5);
}

TEST(Permutation, GroupOrdersBySchreierSims) {
  const PermutationGroup s4(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  EXPECT_EQ(s4.order(), 24);
  EXPECT_EQ(s4.elements().size(), 24U);
  const PermutationGroup c7(7, {Permutation({1, 2, 3, 4, 5, 6, 0})});
  EXPECT_EQ(c7.order(), 7);
  EXPECT_FALSE(c7.contains(Permutation({0, 6, 5, 4, 3, 2, 1})));
  const Permutation g({1, 2, 0});
  const Permutation h({0, 2, 1});
  EXPECT_EQ((g * h)(1), g(h(1)));
  EXPECT_TRUE((g * g.inverse()).is_identity());
}

TEST(Permutation, TransporterAndStabilizer) {
  const PermutationGroup s4(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  const std::vector<std::pair<int, int>> constraints{{0, 2}, {1, 3}};
  const auto g = s4.transporter(constraints);
  ASSERT_TRUE(g);
  EXPECT_EQ((*g)(0), 2);
  EXPECT_EQ((*g)(1), 3);
  const PermutationGroup stab(4, s4.stabilizer_generators(0));
  EXPECT_EQ(stab.order(), 6);
  EXPECT_EQ(s4.orbit(0).size(), 4U);
}

TEST(PartialIsometry, EnumerationCountsAndOrder) {
  const auto k3 = make_uniform(3);
  const auto all = enumerate_partial_isometries(k3, 3);
  EXPECT_EQ(all.size(), 9U + 18U + 6U);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  const auto p3 = make_path(3);
  std::size_t count = 0;
  for (const auto& p : enumerate_partial_isometries(p3, 3)) {
    EXPECT_TRUE(p.preserves_distances(p3));
    ++count;
  }
  EXPECT_EQ(count, 9U + 10U + 2U);
}

TEST(Isometry, GroupsOfSmallSpaces) {
  EXPECT_EQ(compute_isometry_group(make_path(4)).order(), 2);
  EXPECT_EQ(compute_isometry_group(make_uniform(4)).order(), 24);
  EXPECT_EQ(enumerate_isometries(make_uniform(3)).size(), 6U);
  const auto w = oracle::cycle_witness_p4();
  EXPECT_EQ(compute_isometry_group(w.witness).order(), 14);
}

TEST(Isometry, AlmostTransitivity) {
  const auto k4 = make_uniform(4);
  const auto full = compute_isometry_group(k4);
  EXPECT_TRUE(check_almost_transitive(k4, full, 3).holds);
  const PermutationGroup c4(4, {Permutation({1, 2, 3, 0})});
  const auto result = check_almost_transitive(k4, c4, 2);
  EXPECT_FALSE(result.holds);
  ASSERT_TRUE(result.counterexample);
  EXPECT_EQ(result.counterexample->domain_size(), 2);
  EXPECT_TRUE(check_almost_transitive(k4, c4, 2, Rational(2)).holds);
}

TEST(EpsilonNet, GreedyNetOnPath) {
  const auto net = extract_epsilon_net(make_path(5), Rational(2));
  EXPECT_EQ(net.points, (std::vector<int>{0, 2, 4}));
  for (int i = 0; i < 5; ++i) EXPECT_LT(make_path(5).d(i, net.to_net[i]), 2);
  EXPECT_EQ(net.subspace.size(), 3);
}

TEST(Envelope, StaircasesAreMonotone) {
  const auto p4 = make_path(4);
  const std::vector<std::vector<double>> images{{0.0}, {1.0}, {1.5}, {3.0}};
  const auto env = empirical_envelopes(p4, images, 2.0);
  ASSERT_EQ(env.distances, (std::vector<Dist>{1, 2, 3}));
  EXPECT_DOUBLE_EQ(env.raw_min[0], 0.5);
  EXPECT_DOUBLE_EQ(env.raw_max[0], 1.5);
  EXPECT_TRUE(std::is_sorted(env.rho1.begin(), env.rho1.end()));
  EXPECT_TRUE(std::is_sorted(env.rho2.begin(), env.rho2.end()));
  EXPECT_FALSE(env.degenerate);
}

TEST(Oracle, SpacesUpToIsomorphism) {
  const auto spaces = oracle::spaces_up_to_iso(4, {1, 2}, DistanceValueSet::finite({1, 2}));
  EXPECT_EQ(spaces.size(), 1U + 2U + 4U + 11U);
}
