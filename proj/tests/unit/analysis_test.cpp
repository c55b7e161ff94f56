#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "urysohn/averaging.hpp"
#include "urysohn/convexity.hpp"
#include "urysohn/hull.hpp"
#include "urysohn/isometry.hpp"
#include "urysohn/probe.hpp"
#include "urysohn/trees.hpp"

using namespace urysohn;

namespace {

ExactVector ev(std::initializer_list<long> xs) {
  ExactVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Averaging, SwapOnTwoPoints) {
  const auto space = make_path(2);
  const PermutationGroup swap(2, {Permutation({1, 0})});
  const auto e = average_map(space, swap, {ev({0}), ev({1})});
  EXPECT_EQ(e.squared_distance(0, 1), Rational(1));
  EXPECT_NEAR(e.distance(0, 1), 1.0, 1e-12);
  EXPECT_TRUE(check_averaging(e).ok());
  EXPECT_TRUE(check_metric_transform(e).exists);
}

TEST(Averaging, TrivialGroupKeepsPhi) {
  const auto space = make_path(3);
  const std::vector<ExactVector> phi{ev({0, 0}), ev({1, 0}), ev({1, 1})};
  const auto e = average_map(space, PermutationGroup(3, {}), phi);
  EXPECT_EQ(e.squared_distance(0, 2), Rational(2));
  EXPECT_TRUE(check_averaging(e).ok());
}

TEST(Averaging, RejectsNonIsometries) {
  EXPECT_THROW(average_map(make_path(3), PermutationGroup(3, {Permutation({1, 0, 2})}),
                           {ev({0}), ev({1}), ev({2})}),
               InvalidInput);
}

TEST(Averaging, QuadraticMeanOnSmallSpaces) {
  std::mt19937_64 rng(11);
  for (const auto& space : oracle::spaces_up_to_iso(4, {1, 2}, DistanceValueSet::finite({1, 2}))) {
    if (space.size() == 0) continue;
    const auto group = compute_isometry_group(space);
    std::vector<ExactVector> phi;
    for (int i = 0; i < space.size(); ++i) phi.push_back(ev({static_cast<long>(rng() % 5), static_cast<long>(rng() % 5)}));
    const auto e = average_map(space, group, phi);
    EXPECT_TRUE(check_averaging(e).ok()) << space.name();
    const auto elements = group.elements();
    for (int x = 0; x < space.size(); ++x) {
      for (int y = 0; y < space.size(); ++y) {
        EXPECT_EQ(e.squared_distance(x, y) * static_cast<long>(elements.size()),
                  oracle::direct_quadratic_sum(elements, phi, x, y));
      }
    }
  }
}

TEST(Averaging, MetricTransform) {
  const auto triangle = make_uniform(3);
  const auto e = average_map(triangle, compute_isometry_group(triangle), {ev({0, 0}), ev({1, 0}), ev({0, 2})});
  const auto transform = check_metric_transform(e);
  ASSERT_TRUE(transform.exists);
  EXPECT_EQ(transform.squared_table.size(), 1U);
  const std::vector<ExactVector> bent{ev({0, 0}), ev({1, 0}), ev({1, 1}), ev({3, 0})};
  const auto none = check_metric_transform(make_path(4), bent);
  EXPECT_FALSE(none.exists);
  ASSERT_TRUE(none.violation);
  const auto approx = check_metric_transform(make_path(4), {{0.0}, {1.0}, {2.0}, {3.0}}, 2.0);
  EXPECT_TRUE(approx.exists);
}

TEST(Convexity, HilbertModulusMatchesClosedForm) {
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(0.1 * i);
  for (const auto& point : modulus_convexity(2.0, 3, grid, 1)) {
    EXPECT_NEAR(point.delta, delta_l2(point.eps), 1e-6) << point.eps;
    EXPECT_NEAR(point.delta, point.closed_form, 1e-6);
  }
  for (const auto& point : modulus_smoothness(2.0, 2, {0.1, 0.5, 1.0, 2.0})) {
    EXPECT_NEAR(point.rho, rho_l2(point.tau), 1e-6) << point.tau;
  }
}

TEST(Convexity, EllOneIsFlat) {
  for (const auto& point : modulus_convexity(1.0, 2, {0.5, 1.0, 1.5, 2.0})) EXPECT_NEAR(point.delta, 0.0, 1e-9);
  for (const auto& point : modulus_smoothness(1.0, 2, {0.25, 0.5, 1.0})) EXPECT_NEAR(point.rho, point.tau, 1e-6);
}

TEST(Convexity, FourNormIsUniformlyConvex) {
  const auto points = modulus_convexity(4.0, 2, {1.0, 2.0});
  EXPECT_GT(points[0].delta, 0.0);
  EXPECT_LT(points[0].delta, delta_l2(1.0) + 1e-9);
  EXPECT_NEAR(points[1].delta, 1.0, 1e-9);
}

TEST(SupportFunctional, FourNorm) {
  const std::vector<double> x{1.0, 1.0};
  const auto f = support_functional(4.0, x);
  EXPECT_NEAR(f[0], std::pow(2.0, -0.75), 1e-12);
  EXPECT_NEAR(f[1], std::pow(2.0, -0.75), 1e-12);
  const auto g = support_functional(4.0, {-1.0, -1.0});
  EXPECT_NEAR(g[0], -f[0], 1e-12);
  const auto diag = check_support_functional(4.0, x, f);
  EXPECT_LT(diag.dual_norm_error, 1e-12);
  EXPECT_LT(diag.norming_error, 1e-12);
  EXPECT_GT(diag.uniqueness_margin, 0.0);
}

TEST(SupportFunctional, Refusals) {
  EXPECT_THROW(support_functional(1.0, {1.0, 0.0}), InvalidInput);
  EXPECT_THROW(support_functional(INFINITY, {1.0, 0.0}), InvalidInput);
  EXPECT_THROW(support_functional(2.0, {0.0, 0.0}), InvalidInput);
}

TEST(Hull, SeparatedSegments) {
  const auto sep = hull_separation({{0, 0}, {0, 1}}, {{2, 0}, {2, 1}});
  EXPECT_NEAR(sep.distance, 2.0, 1e-9);
  ASSERT_EQ(sep.functional.size(), 2U);
  EXPECT_NEAR(sep.functional[0], -1.0, 1e-9);
  EXPECT_NEAR(sep.functional[1], 0.0, 1e-9);
  const auto meet = hull_separation({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}});
  EXPECT_NEAR(meet.distance, 0.0, 1e-9);
  EXPECT_TRUE(meet.functional.empty());
  EXPECT_NEAR(hull_separation({{0, 0}}, {{1, 1}, {2, 0}}, 1.0).distance, 2.0, 1e-3);
}

TEST(Hull, AgreesWithSampling) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<double>> a(4), b(4);
    for (auto& v : a) v = {u(rng), u(rng)};
    for (auto& v : b) v = {1.2 + u(rng), u(rng) + 0.5 * u(rng)};
    EXPECT_NEAR(hull_separation(a, b).distance, oracle::sampled_hull_distance(a, b), 1e-4) << trial;
  }
}

TEST(Trees, SmallTrees) {
  NEpsTree root{0, {{"", ev({3})}}, Rational(1), Rational(3)};
  EXPECT_TRUE(validate_tree(root).ok());
  NEpsTree pm{1, {{"", ev({0, 0})}, {"0", ev({1, 0})}, {"1", ev({-1, 0})}}, Rational(2), Rational(1)};
  EXPECT_TRUE(validate_tree(pm).ok());
  auto wide = pm;
  wide.eps = 3;
  EXPECT_TRUE(validate_tree(wide).has("separation"));
  auto moved = pm;
  moved.nodes["0"][0] += Rational(1, 1000000);
  EXPECT_TRUE(validate_tree(moved).has("midpoint"));
  auto missing = pm;
  missing.nodes.erase("1");
  EXPECT_TRUE(validate_tree(missing).has("shape"));
  EXPECT_EQ(heap_address(1), "");
  EXPECT_EQ(heap_address(5), "01");
}

TEST(Trees, NestedSets) {
  std::vector<std::vector<ExactVector>> sets(4);
  sets[1] = {ev({0, 0}), ev({2, 0}), ev({0, 2}), ev({2, 2})};
  sets[2] = {ev({0, 0}), ev({0, 2})};
  sets[3] = {ev({2, 0}), ev({2, 2})};
  const auto tree = tree_from_nested_sets(sets, Rational(2), Rational(3));
  EXPECT_EQ(tree.nodes.at(""), ev({1, 0}));
  EXPECT_TRUE(validate_tree(tree).ok());
  EXPECT_THROW(tree_from_nested_sets(sets, Rational(3), Rational(3)), InvalidInput);
  auto outside = sets;
  outside[2].push_back(ev({5, 5}));
  EXPECT_THROW(tree_from_nested_sets(outside, Rational(1), Rational(10)), InvalidInput);
}

namespace {

double oracle_gamma(const TEpsilonRealization& r, const Embedding& embedding, int n) {
  double best = INFINITY;
  for (int len = 0; len < n; ++len) {
    for (int s = 0; s < (1 << len); ++s) {
      std::string prefix;
      for (int i = len - 1; i >= 0; --i) prefix += ((s >> i) & 1) ? '1' : '0';
      std::vector<std::vector<double>> left, right;
      for (const auto& [bits, idx] : r.points) {
        if (bits.compare(0, len, prefix) != 0) continue;
        auto v = to_double(embedding.at(r.space.label(idx)));
        (bits[len] == '0' ? left : right).push_back(v);
      }
      best = std::min(best, oracle::sampled_hull_distance_nd(left, right, 5));
    }
  }
  return best;
}

}  // namespace

TEST(Probe, PinnedCertificate) {
  const auto witness = build_sphere_witness(6, 2, 3);
  const auto realization = realize_t_epsilon(witness);
  const auto embedding = kuratowski_coordinates(realization.space, witness.fragment.size());
  const auto cert = convexity_probe(witness, realization, embedding, "kuratowski");
  EXPECT_EQ(probe_summary(cert), "depth=3 gamma_hat=1.414214 radius=10.770330 bound=1261 degenerate=0 tree=1");
  ASSERT_TRUE(cert.tree);
  EXPECT_TRUE(validate_tree(*cert.tree).ok());
  EXPECT_LE(cert.eps_claimed, cert.gamma_hat);
  const double sampled = oracle_gamma(realization, embedding, 3);
  EXPECT_LE(cert.gamma_hat, sampled + 1e-9);
  EXPECT_LT(sampled - cert.gamma_hat, 1e-2);
}

TEST(Probe, SingleStepSeparation) {
  const auto witness = build_sphere_witness(6, 2, 1);
  const auto realization = realize_t_epsilon(witness);
  const auto embedding = kuratowski_coordinates(realization.space, witness.b.front());
  const auto cert = convexity_probe(witness, realization, embedding);
  EXPECT_NEAR(cert.gamma_hat, 1.0, 1e-12);
  EXPECT_TRUE(cert.tree);
}

TEST(Probe, DegenerateEmbedding) {
  const auto witness = build_sphere_witness(6, 2, 2);
  const auto realization = realize_t_epsilon(witness);
  Embedding flat;
  for (const auto& label : realization.space.labels()) flat[label] = ev({0, 0});
  const auto cert = convexity_probe(witness, realization, flat);
  EXPECT_TRUE(cert.degenerate);
  EXPECT_FALSE(cert.tree);
  EXPECT_EQ(cert.depth_bound, -1);
}

TEST(Probe, DepthBound) {
  EXPECT_EQ(tree_depth_bound(3.0, 1.0), 0);
  const double gamma = 1.0, radius = 4.0;
  const double delta = 1.0 - std::sqrt(1.0 - (gamma / radius) * (gamma / radius) / 4.0);
  const auto expected = 1 + static_cast<long long>(std::floor(std::log(radius / (gamma / 2)) / -std::log(1.0 - delta)));
  EXPECT_EQ(tree_depth_bound(gamma, radius), expected);
}
