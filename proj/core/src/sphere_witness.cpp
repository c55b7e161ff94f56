#include "urysohn/sphere_witness.hpp"

#include <algorithm>
#include <numeric>

#include "urysohn/parallel.hpp"

namespace urysohn {

const KatetovFunction& SphereWitness::function(const std::string& bits) const {
  const auto it = std::lower_bound(epsilons.begin(), epsilons.end(), bits);
  if (it == epsilons.end() || *it != bits) throw InvalidInput("unknown epsilon '" + bits + "'");
  return family[static_cast<std::size_t>(it - epsilons.begin())];
}

namespace {

std::vector<std::string> bitstrings(int n) {
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::string bits(n, '0');
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << (n - 1 - i))) bits[i] = '1';
    }
    out.push_back(std::move(bits));
  }
  return out;
}

KatetovFunction sphere_function(int m, int k, int n, const std::string& bits) {
  KatetovFunction f(2 * n + 3);
  f[0] = m;
  for (int i = 0; i <= n; ++i) {
    const int e = i == 0 ? 0 : bits[i - 1] - '0';
    f[1 + i] = k + e;
    f[n + 2 + i] = m - k - e;
  }
  return f;
}

}  // namespace

SphereWitness build_sphere_witness(int m, int k, int n, int workers) {
  if (k < 1 || k > m - 2) throw InvalidInput("parameters must satisfy 1 <= k <= m-2");
  if (n < 1 || n > 16) throw InvalidInput("N must be between 1 and 16");
  SphereWitness w;
  w.m = m;
  w.k = k;
  w.n = n;
  w.small_k = k < 2;
  const int size = 2 * n + 3;
  std::vector<std::string> labels{"z0"};
  w.z0 = 0;
  for (int i = 0; i <= n; ++i) {
    w.a.push_back(1 + i);
    labels.push_back("a" + std::to_string(i));
  }
  for (int i = 0; i <= n; ++i) {
    w.b.push_back(n + 2 + i);
    labels.push_back("b" + std::to_string(i));
  }
  DistanceMatrix dist(size, std::vector<Dist>(size, 0));
  auto set = [&](int x, int y, Dist v) { dist[x][y] = dist[y][x] = v; };
  for (int i = 0; i <= n; ++i) {
    set(w.z0, w.a[i], m);
    set(w.z0, w.b[i], m);
    for (int j = 0; j <= n; ++j) {
      if (i != j) {
        set(w.a[i], w.a[j], 1);
        set(w.b[i], w.b[j], 1);
      }
      set(w.a[i], w.b[j], i == j ? m : m - 1);
    }
  }
  w.fragment = FiniteMetricSpace("sphere-m" + std::to_string(m) + "-k" + std::to_string(k) + "-N" + std::to_string(n),
                                 labels, 1, dist, DistanceValueSet::integers(1));
  w.epsilons = bitstrings(n);
  w.family.resize(w.epsilons.size());
  std::vector<ValidationReport> reports(w.epsilons.size());
  parallel_for(w.epsilons.size(), workers, [&](std::size_t i) {
    w.family[i] = sphere_function(m, k, n, w.epsilons[i]);
    reports[i] = validate_katetov(w.fragment, w.family[i]);
  });
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!reports[i].ok()) {
      throw ConsistencyError("f_" + w.epsilons[i] + " is not a Katetov function:\n" + reports[i].to_string());
    }
  }
  return w;
}

ValidationReport validate_sphere_witness(const SphereWitness& w) {
  ValidationReport report = validate_space(w.fragment.matrix(), w.fragment.scale(), w.fragment.value_set());
  const auto expect = [&](int x, int y, Dist v) {
    if (w.fragment.d(x, y) != v) report.add("table", {x, y}, "expected " + std::to_string(v));
  };
  for (int i = 0; i <= w.n; ++i) {
    expect(w.z0, w.a[i], w.m);
    expect(w.z0, w.b[i], w.m);
    for (int j = 0; j <= w.n; ++j) {
      if (i != j) {
        expect(w.a[i], w.a[j], 1);
        expect(w.b[i], w.b[j], 1);
      }
      expect(w.a[i], w.b[j], i == j ? w.m : w.m - 1);
    }
  }
  for (std::size_t e = 0; e < w.epsilons.size(); ++e) {
    if (w.family[e] != sphere_function(w.m, w.k, w.n, w.epsilons[e])) {
      report.add("family", {static_cast<int>(e)}, "f_" + w.epsilons[e] + " does not match its definition");
    }
    for (const auto& v : validate_katetov(w.fragment, w.family[e]).violations()) {
      report.add("katetov-" + v.kind, v.witness, "f_" + w.epsilons[e] + ": " + v.detail);
    }
  }
  return report;
}

TEpsilonRealization realize_t_epsilon(const SphereWitness& w) {
  const int base = w.fragment.size();
  std::vector<int> fragment_points(base);
  std::iota(fragment_points.begin(), fragment_points.end(), 0);
  TEpsilonRealization out;
  FiniteMetricSpace current = w.fragment;
  for (std::size_t e = 0; e < w.epsilons.size(); ++e) {
    const auto ext = controlled_extension(current, fragment_points, w.family[e]);
    if (!ext.report.ok()) {
      throw ConsistencyError("controlled extension of f_" + w.epsilons[e] + " fails:\n" + ext.report.to_string());
    }
    current = one_point_extension(current, ext.values, "x" + w.epsilons[e]);
    out.points.emplace_back(w.epsilons[e], current.size() - 1);
  }
  const auto report = validate_space(current.matrix(), current.scale(), current.value_set());
  if (!report.ok()) throw ConsistencyError("realization is not a metric space:\n" + report.to_string());
  for (const auto& [bits, x] : out.points) {
    const auto& f = w.function(bits);
    for (int p = 0; p < base; ++p) {
      if (current.d(x, p) != f[p]) throw ConsistencyError("x" + bits + " misses a required sphere");
    }
  }
  out.space = std::move(current);
  return out;
}

}  // namespace urysohn
