#pragma once

#include <vector>

#include "urysohn/metric_space.hpp"

namespace urysohn {

struct EpsilonNet {
  /// Net points in the order they were chosen.
  std::vector<int> points;
  /// For each point of the space, a net point within epsilon (nearest, first in net order on ties).
  std::vector<int> to_net;
  FiniteMetricSpace subspace;
};

/// Greedy net in point order: a point joins when it is at distance >= epsilon from every
/// point already chosen.
EpsilonNet extract_epsilon_net(const FiniteMetricSpace& space, const Rational& epsilon);

}  // namespace urysohn
