#pragma once

#include <limits>
#include <vector>

#include "urysohn/quotient.hpp"

namespace urysohn {

inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

struct CosetEdge {
  int from = 0;
  int to = 0;
  Dist label = 0;
  /// translator.(phi(c), phi(d)) = (from, to) with label d_X(c, d).
  Word translator;
  int c = 0;
  int d = 0;
};

/// Edge set closed under the generator pair action, with exact shortest paths on the orbit.
struct LabeledCosetGraph {
  /// Orbit elements (points of omega), sorted.
  std::vector<int> nodes;
  std::vector<CosetEdge> edges;
  /// path[i][j] between nodes[i] and nodes[j]; kUnreachable when disconnected.
  std::vector<std::vector<Dist>> path;
  /// pred[i][j]: node index before j on a shortest path from i, or -1.
  std::vector<std::vector<int>> pred;
  /// Edge index used to reach j from pred[i][j].
  std::vector<std::vector<int>> pred_edge;
  bool connected = true;

  int node_index(int omega_point) const;
  Dist distance(int alpha, int beta) const;
  /// Edge indices along the stored shortest path between two omega points.
  std::vector<int> shortest_path_edges(int alpha, int beta) const;
};

LabeledCosetGraph build_coset_graph(const QuotientAction& action);

/// Checks symmetry, zero diagonal, the triangle inequality and generator invariance.
ValidationReport check_path_pseudometric(const LabeledCosetGraph& graph, const QuotientAction& action);

/// Identifies nodes at path distance 0.
struct MetricQuotient {
  std::vector<int> class_of_node;
  int classes = 0;
  DistanceMatrix dist;
};

MetricQuotient metric_quotient(const LabeledCosetGraph& graph);

}  // namespace urysohn
