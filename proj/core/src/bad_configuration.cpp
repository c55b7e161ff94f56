#include "urysohn/bad_configuration.hpp"

namespace urysohn {

std::optional<BadConfiguration> detect_bad_configuration(const QuotientAction& action,
                                                         const LabeledCosetGraph& graph) {
  const FiniteMetricSpace& x = action.space();
  const auto phi = action.phi();
  const Alphabet& alphabet = action.alphabet();
  const int a0 = action.a0();
  for (int a = 0; a < x.size(); ++a) {
    for (int b = a + 1; b < x.size(); ++b) {
      const Dist through = graph.distance(phi[a], phi[b]);
      if (through >= x.d(a, b)) continue;
      BadConfiguration config;
      config.p = alphabet.singleton(a0, a);
      config.q = alphabet.singleton(a0, b);
      config.required = x.d(a, b);
      int at = phi[a];
      for (int ei : graph.shortest_path_edges(phi[a], phi[b])) {
        const CosetEdge& e = graph.edges[ei];
        int c = e.c;
        int d = e.d;
        if (action.act(e.translator, phi[c]) != at) std::swap(c, d);
        config.steps.push_back({alphabet.singleton(a0, c), alphabet.singleton(a0, d), e.translator});
        config.total_cost += e.label;
        at = action.act(e.translator, phi[d]);
      }
      const auto report = verify_bad_configuration(action, config);
      if (!report.ok()) throw ConsistencyError("reconstructed bad configuration fails:\n" + report.to_string());
      return config;
    }
  }
  return std::nullopt;
}

ValidationReport verify_bad_configuration(const QuotientAction& action, const BadConfiguration& config) {
  ValidationReport report;
  const Alphabet& alphabet = action.alphabet();
  const int a0 = action.a0();
  const int base = action.base();
  auto coset = [&](const Word& x, int letter) { return action.act(multiply(x, Word{Letter{letter, false}}), base); };
  auto point = [&](int letter) -> int {
    if (!alphabet.letter(letter).defined_at(a0)) throw InvalidInput("letter is undefined at the base point");
    return alphabet.letter(letter)(a0);
  };
  const FiniteMetricSpace& x = action.space();
  const auto& steps = config.steps;
  const int n = static_cast<int>(steps.size());
  if (n == 0) {
    if (coset({}, config.p) != coset({}, config.q)) report.add("endpoints", {}, "p and q differ modulo H");
  } else {
    if (coset(steps[0].x, steps[0].p) != coset({}, config.p)) report.add("first", {0}, "x_1 p_1 differs from p");
    for (int i = 0; i + 1 < n; ++i) {
      if (coset(steps[i + 1].x, steps[i + 1].p) != coset(steps[i].x, steps[i].q)) {
        report.add("link", {i, i + 1}, "x_{i+1} p_{i+1} differs from x_i q_i");
      }
    }
    if (coset(steps[n - 1].x, steps[n - 1].q) != coset({}, config.q)) report.add("last", {n - 1}, "x_n q_n differs from q");
  }
  Dist cost = 0;
  for (const auto& s : steps) cost += x.d(point(s.p), point(s.q));
  if (cost != config.total_cost) report.add("cost", {}, "recorded cost differs from the sum of step distances");
  const Dist required = x.d(point(config.p), point(config.q));
  if (required != config.required) report.add("required", {}, "recorded target distance is wrong");
  if (cost >= required) report.add("strict", {}, "total cost is not below the target distance");
  return report;
}

}  // namespace urysohn
