#pragma once

#include <vector>

#include "urysohn/metric_space.hpp"

namespace urysohn {

/// Monotone lower and upper envelopes of an embedding, tabulated on the positive
/// distances that occur in the space.
struct EmbeddingEnvelope {
  std::vector<Dist> distances;
  std::vector<double> raw_min;
  std::vector<double> raw_max;
  /// rho1(r) = min over r' >= r of raw_min, non-decreasing.
  std::vector<double> rho1;
  /// rho2(r) = max over r' <= r of raw_max, non-decreasing.
  std::vector<double> rho2;
  /// Some positive distance is collapsed to 0.
  bool degenerate = false;
};

/// `images[i]` is the image of point i in l^p (p may be infinity).
EmbeddingEnvelope empirical_envelopes(const FiniteMetricSpace& space, const std::vector<std::vector<double>>& images,
                                      double p);

}  // namespace urysohn
