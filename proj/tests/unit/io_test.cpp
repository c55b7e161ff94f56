#include <gtest/gtest.h>

#include "oracles.hpp"
#include "urysohn/io.hpp"

using namespace urysohn;

TEST(Io, RationalRoundTrip) {
  for (const Rational& r : {Rational(0), Rational(7), Rational(-3, 4), Rational(1, 1000000)}) {
    EXPECT_EQ(rational_from_json(rational_to_json(r)), r);
  }
  EXPECT_EQ(rational_to_json(Rational(5)), Json(5));
  EXPECT_EQ(rational_to_json(Rational(1, 3)), Json("1/3"));
}

TEST(Io, SpaceRoundTrip) {
  const FiniteMetricSpace space("p", {"x", "y", "z"}, 2, {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}},
                                DistanceValueSet::finite({1, 2, 3}));
  EXPECT_EQ(space_from_json(space_to_json(space)), space);
  EXPECT_EQ(space_from_json(Json::parse(dump_json(space_to_json(make_path(4))))), make_path(4));
}

TEST(Io, WordAndPartialRoundTrip) {
  const Word w{{3, false}, {1, true}};
  EXPECT_EQ(word_from_json(word_to_json(w)), w);
  const auto space = make_path(3);
  const PartialIsometry p(3, {0, 1}, {2, 1});
  EXPECT_EQ(partial_from_json(space, partial_to_json(space, p)), p);
}

TEST(Io, WitnessRoundTrip) {
  const auto w = oracle::cycle_witness_p4();
  const auto back = witness_from_json(witness_to_json(w));
  EXPECT_EQ(back.witness, w.witness);
  EXPECT_EQ(back.embed, w.embed);
  EXPECT_EQ(back.extensions.size(), w.extensions.size());
  EXPECT_TRUE(verify_witness(back).ok());
}

TEST(Io, QuotientRoundTrip) {
  const auto action = oracle::cycle_action_p4();
  const auto back = quotient_from_json(quotient_to_json(action));
  EXPECT_EQ(back.omega(), action.omega());
  EXPECT_EQ(back.generators(), action.generators());
  EXPECT_EQ(back.phi(), action.phi());
}

TEST(Io, TreeAndCertificateRoundTrip) {
  const auto witness = build_sphere_witness(6, 2, 2);
  const auto realization = realize_t_epsilon(witness);
  const auto cert = convexity_probe(witness, realization, kuratowski_coordinates(realization.space, witness.fragment.size()));
  const auto back = certificate_from_json(certificate_to_json(cert));
  ASSERT_TRUE(back.tree);
  EXPECT_EQ(back.tree->nodes, cert.tree->nodes);
  EXPECT_EQ(back.tree->eps, cert.tree->eps);
  EXPECT_EQ(probe_summary(back), probe_summary(cert));
}

TEST(Io, SphereWitnessRoundTrip) {
  const auto witness = build_sphere_witness(5, 2, 2);
  const auto back = sphere_witness_from_json(sphere_witness_to_json(witness));
  EXPECT_EQ(back.fragment, witness.fragment);
  EXPECT_EQ(back.epsilons, witness.epsilons);
  EXPECT_TRUE(validate_sphere_witness(back).ok());
}
