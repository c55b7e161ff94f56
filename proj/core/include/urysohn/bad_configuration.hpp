#pragma once

#include <optional>
#include <vector>

#include "urysohn/coset_graph.hpp"

namespace urysohn {

struct BadConfigurationStep {
  int p = 0;
  int q = 0;
  Word x;
};

/// Letters p, q and steps (p_i, q_i, x_i) with
///   x_1 p_1 = p, x_{i+1} p_{i+1} = x_i q_i, x_n q_n = q  (mod H)
/// and sum d(p_i(a0), q_i(a0)) < d(p(a0), q(a0)). With no steps the condition is p = q mod H.
struct BadConfiguration {
  int p = 0;
  int q = 0;
  std::vector<BadConfigurationStep> steps;
  Dist total_cost = 0;
  Dist required = 0;
};

/// Finds a pair of X whose path distance in the coset graph is below its distance in X
/// and rebuilds an explicit chain along a shortest path.
std::optional<BadConfiguration> detect_bad_configuration(const QuotientAction& action,
                                                         const LabeledCosetGraph& graph);

/// Checks every defining condition of the chain.
ValidationReport verify_bad_configuration(const QuotientAction& action, const BadConfiguration& config);

}  // namespace urysohn
