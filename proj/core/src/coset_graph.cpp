#include "urysohn/coset_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <tuple>

namespace urysohn {

int LabeledCosetGraph::node_index(int omega_point) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), omega_point);
  if (it == nodes.end() || *it != omega_point) throw InvalidInput("point is not in the orbit");
  return static_cast<int>(it - nodes.begin());
}

Dist LabeledCosetGraph::distance(int alpha, int beta) const { return path[node_index(alpha)][node_index(beta)]; }

std::vector<int> LabeledCosetGraph::shortest_path_edges(int alpha, int beta) const {
  const int s = node_index(alpha);
  int t = node_index(beta);
  if (path[s][t] == kUnreachable) throw InvalidInput("nodes are disconnected");
  std::vector<int> out;
  while (t != s) {
    out.push_back(pred_edge[s][t]);
    t = pred[s][t];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

LabeledCosetGraph build_coset_graph(const QuotientAction& action) {
  LabeledCosetGraph g;
  g.nodes = action.orbit();
  const auto phi = action.phi();
  const FiniteMetricSpace& x = action.space();
  const auto gens = action.distinct_generators();

  std::map<std::tuple<int, int, Dist>, int> seen;
  std::deque<int> queue;
  auto push = [&](int from, int to, Dist label, Word translator, int c, int d) {
    if (from > to) {
      std::swap(from, to);
      std::swap(c, d);
    }
    if (!seen.try_emplace({from, to, label}, static_cast<int>(g.edges.size())).second) return;
    g.edges.push_back({from, to, label, std::move(translator), c, d});
    queue.push_back(static_cast<int>(g.edges.size()) - 1);
  };
  for (int a = 0; a < x.size(); ++a) {
    for (int b = a + 1; b < x.size(); ++b) {
      push(phi[a], phi[b], x.d(a, b), Word{}, a, b);
    }
  }
  while (!queue.empty()) {
    const CosetEdge e = g.edges[queue.front()];
    queue.pop_front();
    for (const auto& [letter, perm] : gens) {
      push(perm(e.from), perm(e.to), e.label, multiply(Word{Letter{letter, false}}, e.translator), e.c, e.d);
    }
  }

  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<std::pair<int, int>>> adjacency(n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const int u = g.node_index(g.edges[i].from);
    const int v = g.node_index(g.edges[i].to);
    adjacency[u].emplace_back(v, static_cast<int>(i));
    adjacency[v].emplace_back(u, static_cast<int>(i));
  }
  g.path.assign(n, std::vector<Dist>(n, kUnreachable));
  g.pred.assign(n, std::vector<int>(n, -1));
  g.pred_edge.assign(n, std::vector<int>(n, -1));
  using Item = std::pair<Dist, int>;
  for (int s = 0; s < n; ++s) {
    auto& dist = g.path[s];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du != dist[u]) continue;
      for (const auto& [v, ei] : adjacency[u]) {
        const Dist nd = du + g.edges[ei].label;
        if (nd < dist[v]) {
          dist[v] = nd;
          g.pred[s][v] = u;
          g.pred_edge[s][v] = ei;
          heap.emplace(nd, v);
        }
      }
    }
    if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) g.connected = false;
  }
  return g;
}

ValidationReport check_path_pseudometric(const LabeledCosetGraph& graph, const QuotientAction& action) {
  ValidationReport report;
  const int n = static_cast<int>(graph.nodes.size());
  for (int i = 0; i < n; ++i) {
    if (graph.path[i][i] != 0) report.add("diagonal", {graph.nodes[i]});
    for (int j = 0; j < n; ++j) {
      if (graph.path[i][j] != graph.path[j][i]) report.add("symmetry", {graph.nodes[i], graph.nodes[j]});
      for (int k = 0; k < n; ++k) {
        const Dist ij = graph.path[i][j];
        const Dist jk = graph.path[j][k];
        if (ij == kUnreachable || jk == kUnreachable) continue;
        if (graph.path[i][k] > ij + jk) report.add("triangle", {graph.nodes[i], graph.nodes[j], graph.nodes[k]});
      }
    }
  }
  for (const auto& [letter, perm] : action.distinct_generators()) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (graph.distance(perm(graph.nodes[i]), perm(graph.nodes[j])) != graph.path[i][j]) {
          report.add("invariance", {letter, graph.nodes[i], graph.nodes[j]});
        }
      }
    }
  }
  return report;
}

MetricQuotient metric_quotient(const LabeledCosetGraph& graph) {
  const int n = static_cast<int>(graph.nodes.size());
  MetricQuotient q;
  q.class_of_node.assign(n, -1);
  std::vector<int> representative;
  for (int i = 0; i < n; ++i) {
    if (q.class_of_node[i] >= 0) continue;
    q.class_of_node[i] = q.classes++;
    representative.push_back(i);
    for (int j = i + 1; j < n; ++j) {
      if (q.class_of_node[j] < 0 && graph.path[i][j] == 0) q.class_of_node[j] = q.class_of_node[i];
    }
  }
  q.dist.assign(q.classes, std::vector<Dist>(q.classes, 0));
  for (int a = 0; a < q.classes; ++a) {
    for (int b = 0; b < q.classes; ++b) q.dist[a][b] = graph.path[representative[a]][representative[b]];
  }
  return q;
}

}  // namespace urysohn
