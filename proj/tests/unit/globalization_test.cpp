#include <gtest/gtest.h>

#include "oracles.hpp"
#include "urysohn/bad_configuration.hpp"
#include "urysohn/coset_graph.hpp"
#include "urysohn/globalization.hpp"
#include "urysohn/left_system.hpp"

using namespace urysohn;

TEST(FreeGroup, Reduction) {
  const Word w{{0, false}, {1, false}, {1, true}, {0, true}};
  EXPECT_TRUE(reduce_word(w).empty());
  const Word u{{2, false}, {0, true}};
  EXPECT_TRUE(multiply(u, inverse_word(u)).empty());
  EXPECT_EQ(word_from_codes(word_codes(u)), u);
  EXPECT_EQ(word_to_string({}), "e");
  EXPECT_EQ(word_to_string(u), "p2.p0^-1");
  EXPECT_TRUE(word_less(Word{{5, false}}, u));
}

TEST(FreeGroup, PartialActionComposesRightToLeft) {
  const Alphabet alphabet(make_path(3));
  EXPECT_EQ(alphabet.size(), 21);
  const int s01 = alphabet.singleton(0, 1);
  const int s12 = alphabet.singleton(1, 2);
  const auto composite = eval_partial_action(alphabet, Word{{s12, false}, {s01, false}});
  EXPECT_EQ(composite.domain(), (std::vector<int>{0}));
  EXPECT_EQ(composite(0), 2);
  EXPECT_TRUE(eval_partial_action(alphabet, Word{{s01, false}, {s12, false}}).is_empty());
}

TEST(Globalization, TruncationClasses) {
  const Alphabet alphabet(make_path(2));
  const TruncatedGlobalization zero(alphabet, 0);
  EXPECT_EQ(zero.class_count(), 2);
  const TruncatedGlobalization one(alphabet, 1);
  const int s01 = alphabet.singleton(0, 1);
  EXPECT_EQ(one.class_of(Word{{s01, false}}, 0), one.class_of(Word{}, 1));
  const auto moved = one.act(Letter{s01, false}, one.class_of(Word{}, 0));
  ASSERT_TRUE(moved);
  EXPECT_EQ(*moved, one.class_of(Word{}, 1));
  const auto data = emit_subgroup_data(alphabet, 0);
  EXPECT_FALSE(data.x0.empty());
  EXPECT_FALSE(data.x1.empty());
}

TEST(Quotient, TrivialQuotientIsRejected) {
  for (const auto& space : oracle::spaces_up_to_iso(4, {1, 2}, DistanceValueSet::finite({1, 2}))) {
    auto alphabet = std::make_shared<const Alphabet>(space);
    const QuotientAction trivial(alphabet, 0, 1, std::vector<Permutation>(alphabet->size(), Permutation::identity(1)));
    const auto report = check_quotient(trivial);
    EXPECT_EQ(report.ok(), space.size() < 2) << space.name();
    EXPECT_EQ(check_quotient_words(trivial, emit_subgroup_data(*alphabet, 0)).ok(), report.ok());
  }
}

TEST(Quotient, PointAndWordCriteriaAgree) {
  std::mt19937_64 rng(5);
  const auto spaces = oracle::spaces_up_to_iso(3, {1, 2}, DistanceValueSet::finite({1, 2}));
  for (int trial = 0; trial < 40; ++trial) {
    const auto& space = spaces[rng() % spaces.size()];
    auto alphabet = std::make_shared<const Alphabet>(space);
    const int omega = 1 + static_cast<int>(rng() % 5);
    std::vector<Permutation> gens;
    for (int i = 0; i < alphabet->size(); ++i) {
      std::vector<int> images(omega);
      std::iota(images.begin(), images.end(), 0);
      std::shuffle(images.begin(), images.end(), rng);
      gens.emplace_back(images);
    }
    const QuotientAction action(alphabet, 0, omega, gens);
    EXPECT_EQ(check_quotient(action).ok(), check_quotient_words(action, emit_subgroup_data(*alphabet, 0)).ok());
  }
}

TEST(CosetGraph, CycleActionRestrictsToPath) {
  const auto action = oracle::cycle_action_p4();
  EXPECT_TRUE(check_quotient(action).ok());
  const auto graph = build_coset_graph(action);
  EXPECT_TRUE(check_path_pseudometric(graph, action).ok());
  EXPECT_EQ(graph.nodes.size(), 7U);
  const auto phi = action.phi();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(graph.distance(phi[i], phi[j]), std::abs(i - j));
  }
  EXPECT_FALSE(detect_bad_configuration(action, graph));
  EXPECT_EQ(metric_quotient(graph).classes, 7);
}

TEST(BadConfiguration, ShortestPathMatchesChainEnumeration) {
  std::mt19937_64 rng(2024);
  const auto spaces = oracle::spaces_up_to_iso(4, {1, 2, 3}, DistanceValueSet::integers(1));
  int bad = 0;
  int good = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto& space = spaces[1 + rng() % (spaces.size() - 1)];
    const int omega = space.size() + static_cast<int>(rng() % (13 - space.size()));
    const auto action = oracle::random_accepted_action(space, omega, rng);
    ASSERT_TRUE(check_quotient(action).ok());
    const auto graph = build_coset_graph(action);
    const auto config = detect_bad_configuration(action, graph);
    EXPECT_EQ(config.has_value(), oracle::definition_bad_configuration(action)) << space.name() << " omega " << omega;
    if (config) {
      ++bad;
      EXPECT_TRUE(verify_bad_configuration(action, *config).ok());
      EXPECT_LT(config->total_cost, config->required);
    } else {
      ++good;
    }
  }
  EXPECT_GT(bad, 0);
  EXPECT_GT(good, 0);
}

TEST(LeftSystem, BadConfigurationSystemIsSolvable) {
  std::mt19937_64 rng(77);
  const auto spaces = oracle::spaces_up_to_iso(3, {1, 2}, DistanceValueSet::finite({1, 2}));
  int solved = 0;
  for (int trial = 0; trial < 30 && solved < 5; ++trial) {
    const auto& space = spaces[1 + rng() % (spaces.size() - 1)];
    const auto action = oracle::random_accepted_action(space, space.size() + 1 + static_cast<int>(rng() % 4), rng);
    const auto config = detect_bad_configuration(action, build_coset_graph(action));
    if (!config) continue;
    std::vector<std::pair<int, int>> letters;
    for (const auto& s : config->steps) letters.emplace_back(s.p, s.q);
    const auto system = bad_configuration_system(config->p, config->q, letters);
    const std::vector<QuotientAction> quotients{action};
    const auto values = solve_left_system(system, quotients);
    ASSERT_TRUE(values);
    EXPECT_TRUE(satisfies(system, quotients, *values));
    ++solved;
  }
  EXPECT_GT(solved, 0);
}

TEST(LeftSystem, UnsolvableSystem) {
  const auto action = oracle::cycle_action_p4();
  const int s01 = action.alphabet().singleton(0, 1);
  const int s02 = action.alphabet().singleton(0, 2);
  const auto system = bad_configuration_system(s01, s02, {});
  EXPECT_FALSE(solve_left_system(system, {action}));
}
