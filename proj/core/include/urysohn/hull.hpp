#pragma once

#include <vector>

namespace urysohn {

struct HullSeparation {
  double distance = 0.0;
  /// Optimal points of conv A and conv B.
  std::vector<double> a_point;
  std::vector<double> b_point;
  std::vector<double> a_weights;
  std::vector<double> b_weights;
  /// Norm-one functional f with f(a_point - b_point) = distance; empty when the hulls meet.
  std::vector<double> functional;
  int iterations = 0;
};

/// Minimum l^p distance between the convex hulls of two nonempty point lists. For p = 2
/// this is Wolfe's minimum-norm-point method on the Minkowski difference; other exponents
/// use projected subgradient descent over the two simplices, started from the l^2 optimum,
/// and keep the best iterate (typically within 1e-3).
HullSeparation hull_separation(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b,
                               double p = 2.0);

/// Minimum-norm point of conv(points) in l^2 with its barycentric weights.
std::vector<double> min_norm_point(const std::vector<std::vector<double>>& points, std::vector<double>* weights = nullptr,
                                   int* iterations = nullptr);

}  // namespace urysohn
