#include "urysohn/epsilon_net.hpp"

namespace urysohn {

EpsilonNet extract_epsilon_net(const FiniteMetricSpace& space, const Rational& epsilon) {
  if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
  const Rational threshold = epsilon * space.scale();
  EpsilonNet net;
  if (space.size() == 0) return net;
  for (int x = 0; x < space.size(); ++x) {
    bool far = true;
    for (int y : net.points) {
      if (Rational(space.d(x, y)) < threshold) {
        far = false;
        break;
      }
    }
    if (far) net.points.push_back(x);
  }
  net.to_net.resize(space.size());
  for (int x = 0; x < space.size(); ++x) {
    int best = net.points.front();
    for (int y : net.points) {
      if (space.d(x, y) < space.d(x, best)) best = y;
    }
    net.to_net[x] = best;
  }
  net.subspace = space.subspace(net.points);
  return net;
}

}  // namespace urysohn
