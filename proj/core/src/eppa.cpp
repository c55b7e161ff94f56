#include "urysohn/eppa.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "urysohn/bad_configuration.hpp"
#include "urysohn/coset_graph.hpp"
#include "urysohn/isometry.hpp"
#include "urysohn/katetov.hpp"

namespace urysohn {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::quotient:
      return "quotient";
    case Provenance::brute_force:
      return "brute-force";
    case Provenance::manual:
      return "manual";
  }
  return "manual";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "quotient") return Provenance::quotient;
  if (s == "brute-force") return Provenance::brute_force;
  if (s == "manual") return Provenance::manual;
  throw InvalidInput("unknown provenance '" + s + "'");
}

namespace {

std::string describe(const PartialIsometry& p) {
  std::string out = "{";
  bool first = true;
  for (int a : p.domain()) {
    out += (first ? "" : ", ") + std::to_string(a) + "->" + std::to_string(p(a));
    first = false;
  }
  return out + "}";
}

}  // namespace

ValidationReport verify_witness(const EppaWitness& w) {
  ValidationReport report;
  const FiniteMetricSpace& x = w.base;
  const FiniteMetricSpace& z = w.witness;
  if (static_cast<int>(w.embed.size()) != x.size()) {
    report.add("embed", {}, "embedding has the wrong number of points");
    return report;
  }
  std::set<int> targets;
  for (int a = 0; a < x.size(); ++a) {
    if (w.embed[a] < 0 || w.embed[a] >= z.size()) {
      report.add("embed", {a}, "image out of range");
      return report;
    }
    if (!targets.insert(w.embed[a]).second) report.add("embed", {a}, "embedding is not injective");
  }
  for (int a = 0; a < x.size(); ++a) {
    for (int b = a + 1; b < x.size(); ++b) {
      if (z.d(w.embed[a], w.embed[b]) * x.scale() != x.d(a, b) * z.scale()) {
        report.add("embed-isometry", {a, b}, "distance changes under the embedding");
      }
    }
  }
  std::set<PartialIsometry> covered;
  for (std::size_t e = 0; e < w.extensions.size(); ++e) {
    const auto& ext = w.extensions[e];
    const int ei = static_cast<int>(e);
    if (ext.partial.space_size() != x.size() || ext.global.degree() != z.size()) {
      report.add("extension-shape", {ei}, describe(ext.partial));
      continue;
    }
    covered.insert(ext.partial);
    bool isometry = true;
    for (int u = 0; u < z.size() && isometry; ++u) {
      for (int v = u + 1; v < z.size() && isometry; ++v) isometry = z.d(ext.global(u), ext.global(v)) == z.d(u, v);
    }
    if (!isometry) report.add("extension-isometry", {ei}, describe(ext.partial) + " is not extended by an isometry of Z");
    for (int a : ext.partial.domain()) {
      if (ext.global(w.embed[a]) != w.embed[ext.partial(a)]) {
        report.add("extension-restriction", {ei, a}, describe(ext.partial) + " is not extended at " + std::to_string(a));
        break;
      }
    }
  }
  for (const auto& p : enumerate_partial_isometries(x, x.size())) {
    if (!covered.count(p)) {
      report.add("coverage", p.domain(), describe(p) + " has no extension");
      break;
    }
  }
  return report;
}

std::optional<EppaWitness> assemble_witness(const FiniteMetricSpace& x, const FiniteMetricSpace& z,
                                            std::vector<int> embed, Provenance provenance) {
  EppaWitness w{x, z, std::move(embed), {}, provenance, {}};
  for (const auto& p : enumerate_partial_isometries(x, x.size())) {
    std::vector<std::pair<int, int>> pairs;
    for (int a : p.domain()) pairs.emplace_back(w.embed[a], w.embed[p(a)]);
    auto g = find_extension(z, pairs);
    if (!g) return std::nullopt;
    w.extensions.push_back({p, std::move(*g)});
  }
  return w;
}

namespace {

std::vector<Dist> canonical_form(const FiniteMetricSpace& z, int fixed) {
  const int n = z.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Dist> best;
  do {
    std::vector<Dist> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) flat.push_back(z.d(perm[i], perm[j]));
    }
    if (best.empty() || flat < best) best = std::move(flat);
  } while (std::next_permutation(perm.begin() + fixed, perm.end()));
  return best;
}

bool is_witness(const FiniteMetricSpace& z, const std::vector<PartialIsometry>& letters) {
  for (const auto& p : letters) {
    if (!find_extension(z, p)) return false;
  }
  return true;
}

}  // namespace

SearchOutcome brute_force_witness(const FiniteMetricSpace& x, const BruteForceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  if (x.size() == 0) throw InvalidInput("space must be non-empty");
  const int max_size = options.max_size > 0 ? options.max_size : x.size() + 4;
  Dist bound = options.distance_bound;
  if (bound <= 0) {
    const auto top = options.value_set.max_value();
    bound = top ? *top : x.diameter();
  }
  const auto letters = enumerate_partial_isometries(x, x.size());
  std::vector<int> embed(x.size());
  for (int a = 0; a < x.size(); ++a) embed[a] = a;
  FiniteMetricSpace seed = FiniteMetricSpace::unchecked(x.name(), x.labels(), x.scale(), x.flat(), options.value_set);
  std::vector<FiniteMetricSpace> level{seed};
  for (int size = x.size(); size <= max_size; ++size) {
    for (const auto& z : level) {
      ++out.stats.candidates;
      if (is_witness(z, letters)) {
        auto w = assemble_witness(x, z, embed, Provenance::brute_force);
        if (!w) throw ConsistencyError("brute-force witness lost an extension");
        out.stats.omega = z.size();
        out.stats.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        w->stats = out.stats;
        if (!verify_witness(*w).ok()) throw ConsistencyError("brute-force witness failed verification");
        out.witness = std::move(w);
        return out;
      }
    }
    if (size == max_size) break;
    std::set<std::vector<Dist>> seen;
    std::vector<FiniteMetricSpace> next;
    for (const auto& z : level) {
      for (const auto& f : enumerate_katetov(z, options.value_set, bound)) {
        FiniteMetricSpace grown = one_point_extension(z, f, "n" + std::to_string(z.size()));
        if (!seen.insert(canonical_form(grown, x.size())).second) continue;
        next.push_back(std::move(grown));
        if (seen.size() > options.max_candidates) {
          out.stats.budget_exhausted = true;
          out.stats.note = "candidate budget exhausted at size " + std::to_string(size + 1);
          out.stats.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          return out;
        }
      }
    }
    level = std::move(next);
    out.stats.omega_tried = size + 1;
  }
  out.stats.note = "no witness up to " + std::to_string(max_size) + " points";
  out.stats.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

EppaWitness witness_from_quotient(const QuotientAction& action) {
  const auto report = check_quotient(action);
  if (!report.ok()) throw InvalidInput("quotient action rejected:\n" + report.to_string());
  const auto graph = build_coset_graph(action);
  if (auto bad = detect_bad_configuration(action, graph)) {
    throw InvalidInput("quotient action has a bad configuration of cost " + std::to_string(bad->total_cost) +
                       " below " + std::to_string(bad->required));
  }
  const FiniteMetricSpace& x = action.space();
  const auto mq = metric_quotient(graph);
  const auto phi = action.phi();

  DistanceValueSet values = x.value_set();
  std::optional<Dist> cap;
  if (values.is_convex() && values.max_value()) {
    cap = values.max_value();
  } else {
    values = DistanceValueSet::integers(values.step());
  }
  DistanceMatrix dist = mq.dist;
  if (cap) {
    for (auto& row : dist) {
      for (auto& v : row) v = std::min(v, *cap);
    }
  }
  std::vector<std::string> labels(mq.classes);
  std::vector<int> embed(x.size());
  std::set<std::string> used;
  for (int a = 0; a < x.size(); ++a) {
    embed[a] = mq.class_of_node[graph.node_index(phi[a])];
    labels[embed[a]] = x.label(a);
    used.insert(x.label(a));
  }
  for (int i = 0; i < static_cast<int>(graph.nodes.size()); ++i) {
    const int c = mq.class_of_node[i];
    if (!labels[c].empty()) continue;
    std::string label = "w" + std::to_string(graph.nodes[i]);
    while (used.count(label)) label += "'";
    used.insert(label);
    labels[c] = label;
  }
  FiniteMetricSpace z(x.name().empty() ? "witness" : x.name() + "-witness", labels, x.scale(), dist, values);

  std::vector<int> representative(mq.classes, -1);
  for (int i = 0; i < static_cast<int>(graph.nodes.size()); ++i) {
    if (representative[mq.class_of_node[i]] < 0) representative[mq.class_of_node[i]] = graph.nodes[i];
  }
  EppaWitness w;
  w.base = x;
  w.witness = std::move(z);
  w.embed = std::move(embed);
  w.provenance = Provenance::quotient;
  const Alphabet& alphabet = action.alphabet();
  for (int p = 0; p < alphabet.size(); ++p) {
    std::vector<int> images(mq.classes);
    for (int c = 0; c < mq.classes; ++c) {
      images[c] = mq.class_of_node[graph.node_index(action.generator(p)(representative[c]))];
    }
    w.extensions.push_back({alphabet.letter(p), Permutation(std::move(images))});
  }
  const auto verdict = verify_witness(w);
  if (!verdict.ok()) throw ConsistencyError("quotient witness failed verification:\n" + verdict.to_string());
  return w;
}

bool SimpleGraph::adjacent(int u, int v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

FiniteMetricSpace graph_metric(const SimpleGraph& g) {
  if (g.vertices < 1) throw InvalidInput("graph must have at least one vertex");
  for (const auto& [u, v] : g.edges) {
    if (u == v || u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) throw InvalidInput("graph is not simple");
  }
  DistanceMatrix dist(g.vertices, std::vector<Dist>(g.vertices, 2));
  for (int i = 0; i < g.vertices; ++i) dist[i][i] = 0;
  for (const auto& [u, v] : g.edges) dist[u][v] = dist[v][u] = 1;
  FiniteMetricSpace s(dist, DistanceValueSet::finite({1, 2}));
  s.set_name("graph");
  return s;
}

SimpleGraph decode_graph(const FiniteMetricSpace& space) {
  SimpleGraph g;
  g.vertices = space.size();
  for (int i = 0; i < space.size(); ++i) {
    for (int j = i + 1; j < space.size(); ++j) {
      if (space.d(i, j) == space.scale()) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

GraphWitness graph_eppa(const SimpleGraph& g, const QuotientBudget& budget, int brute_force_extra_points) {
  const FiniteMetricSpace x = graph_metric(g);
  auto outcome = search_witness_quotient(x, budget);
  if (!outcome.witness) {
    BruteForceOptions options;
    options.max_size = x.size() + brute_force_extra_points;
    options.value_set = DistanceValueSet::finite({1, 2});
    options.distance_bound = 2;
    outcome = brute_force_witness(x, options);
  }
  if (!outcome.witness) throw Error("no graph witness found within budget");
  return {*outcome.witness, decode_graph(outcome.witness->witness)};
}

std::optional<std::vector<Dist>> line_witness_search(const std::vector<Dist>& points, int max_size, Dist radius) {
  const FiniteMetricSpace y = make_line(points);
  std::vector<Dist> pool;
  for (Dist c = -radius; c <= radius; ++c) {
    if (std::find(points.begin(), points.end(), c) == points.end()) pool.push_back(c);
  }
  const int extra_max = max_size - static_cast<int>(points.size());
  std::vector<Dist> chosen;
  std::optional<std::vector<Dist>> found;
  std::vector<int> embed(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) embed[i] = static_cast<int>(i);
  auto attempt = [&]() {
    std::vector<Dist> coords = points;
    coords.insert(coords.end(), chosen.begin(), chosen.end());
    if (assemble_witness(y, make_line(coords), embed, Provenance::manual)) found = coords;
  };
  auto rec = [&](auto&& self, std::size_t start, int left) -> void {
    if (found) return;
    attempt();
    if (left == 0) return;
    for (std::size_t i = start; i < pool.size() && !found; ++i) {
      chosen.push_back(pool[i]);
      self(self, i + 1, left - 1);
      chosen.pop_back();
    }
  };
  if (extra_max >= 0) rec(rec, 0, extra_max);
  return found;
}

}  // namespace urysohn
