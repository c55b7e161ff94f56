#include "urysohn/katetov.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace urysohn {

ValidationReport validate_katetov(const FiniteMetricSpace& space, std::span<const Dist> f) {
  if (static_cast<int>(f.size()) != space.size()) {
    throw InvalidInput("function has " + std::to_string(f.size()) + " values for " + std::to_string(space.size()) +
                       " points");
  }
  for (Dist v : f) {
    if (v < 0) throw InvalidInput("function values must be non-negative");
  }
  ValidationReport report;
  const int n = space.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const Dist d = space.d(x, y);
      const Dist gap = f[x] > f[y] ? f[x] - f[y] : f[y] - f[x];
      if (gap > d) {
        report.add("lipschitz", {x, y},
                   "|f(x)-f(y)| = " + std::to_string(gap) + " > d = " + std::to_string(d));
      }
      if (d > f[x] + f[y]) {
        report.add("lower", {x, y}, "d = " + std::to_string(d) + " > f(x)+f(y) = " + std::to_string(f[x] + f[y]));
      }
    }
  }
  return report;
}

FiniteMetricSpace one_point_extension(const FiniteMetricSpace& space, std::span<const Dist> f, std::string label) {
  ValidationReport report = validate_katetov(space, f);
  for (int x = 0; x < space.size(); ++x) {
    if (f[x] == 0) report.add("zero", {x}, "new point would coincide with an existing point");
    else if (!space.value_set().contains(f[x])) report.add("value", {x}, std::to_string(f[x]) + " not admissible");
  }
  if (!report.ok()) throw InvalidSpace(std::move(report));
  const int n = space.size();
  std::vector<Dist> flat;
  flat.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) flat.push_back(space.d(i, j));
    flat.push_back(f[i]);
  }
  flat.insert(flat.end(), f.begin(), f.end());
  flat.push_back(0);
  auto labels = space.labels();
  if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
    throw InvalidInput("label '" + label + "' already in use");
  }
  labels.push_back(std::move(label));
  return FiniteMetricSpace::unchecked(space.name(), std::move(labels), space.scale(), std::move(flat),
                                      space.value_set());
}

std::vector<KatetovFunction> enumerate_katetov(const FiniteMetricSpace& space, const DistanceValueSet& value_set,
                                               Dist bound) {
  if (bound <= 0) throw InvalidInput("bound must be positive");
  const auto candidates = value_set.members_between(1, bound);
  std::vector<KatetovFunction> out;
  const int n = space.size();
  KatetovFunction f;
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      out.push_back(f);
      return;
    }
    for (Dist v : candidates) {
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        const Dist d = space.d(x, y);
        ok = (v > f[y] ? v - f[y] : f[y] - v) <= d && d <= v + f[y];
      }
      if (!ok) continue;
      f.push_back(v);
      rec(x + 1);
      f.pop_back();
    }
  };
  rec(0);
  return out;
}

ControlledExtension controlled_extension(const FiniteMetricSpace& space, std::span<const int> subset,
                                         std::span<const Dist> values_on_subset) {
  if (subset.empty()) throw InvalidInput("controlling subset is empty");
  if (subset.size() != values_on_subset.size()) throw InvalidInput("one value per subset point is required");
  const std::vector<int> points(subset.begin(), subset.end());
  for (int a : points) {
    if (a < 0 || a >= space.size()) throw InvalidInput("subset point out of range");
  }
  const ValidationReport on_subset = validate_katetov(space.subspace(points), values_on_subset);
  if (!on_subset.ok()) throw InvalidSpace(on_subset);
  ControlledExtension out;
  out.values.resize(space.size());
  for (int x = 0; x < space.size(); ++x) {
    Dist best = values_on_subset[0] + space.d(points[0], x);
    for (std::size_t i = 1; i < points.size(); ++i) best = std::min(best, values_on_subset[i] + space.d(points[i], x));
    out.values[x] = best;
  }
  out.report = validate_katetov(space, out.values);
  return out;
}

Dist sup_distance(std::span<const Dist> f, std::span<const Dist> g) {
  if (f.size() != g.size()) throw InvalidInput("functions on different spaces");
  Dist best = 0;
  for (std::size_t i = 0; i < f.size(); ++i) best = std::max(best, f[i] > g[i] ? f[i] - g[i] : g[i] - f[i]);
  return best;
}

KuratowskiEmbedding kuratowski_embed(const FiniteMetricSpace& space) {
  KuratowskiEmbedding out;
  const int n = space.size();
  for (int x = 0; x < n; ++x) {
    KatetovFunction f(n);
    for (int z = 0; z < n; ++z) f[z] = space.d(x, z);
    out.images.push_back(std::move(f));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const Dist s = sup_distance(out.images[x], out.images[y]);
      if (s != space.d(x, y)) {
        out.report.add("isometry", {x, y}, "sup distance " + std::to_string(s) + " != " + std::to_string(space.d(x, y)));
      }
    }
  }
  return out;
}

LiftedAction::LiftedAction(const FiniteMetricSpace& space, PermutationGroup group)
    : space_(space), group_(std::move(group)) {
  if (group_.degree() != space_.size()) throw InvalidInput("group degree does not match the space");
  for (const auto& g : group_.generators()) {
    for (int x = 0; x < space_.size(); ++x) {
      for (int y = x + 1; y < space_.size(); ++y) {
        if (space_.d(g(x), g(y)) != space_.d(x, y)) throw InvalidInput("group element is not an isometry");
      }
    }
  }
}

KatetovFunction LiftedAction::apply(const Permutation& g, std::span<const Dist> f) const {
  if (static_cast<int>(f.size()) != space_.size()) throw InvalidInput("function length mismatch");
  const Permutation inv = g.inverse();
  KatetovFunction out(f.size());
  for (int x = 0; x < space_.size(); ++x) out[x] = f[inv(x)];
  return out;
}

ValidationReport LiftedAction::check(const std::vector<KatetovFunction>& functions) const {
  ValidationReport report;
  const std::set<KatetovFunction> pool(functions.begin(), functions.end());
  const auto kuratowski = kuratowski_embed(space_).images;
  for (std::size_t gi = 0; gi < group_.generators().size(); ++gi) {
    const auto& g = group_.generators()[gi];
    const int gid = static_cast<int>(gi);
    std::vector<KatetovFunction> moved;
    for (std::size_t i = 0; i < functions.size(); ++i) {
      moved.push_back(apply(g, functions[i]));
      if (!pool.count(moved.back())) report.add("closure", {gid, static_cast<int>(i)}, "image not in the list");
      if (!validate_katetov(space_, moved.back()).ok()) report.add("katetov", {gid, static_cast<int>(i)});
    }
    for (std::size_t i = 0; i < functions.size(); ++i) {
      for (std::size_t j = i + 1; j < functions.size(); ++j) {
        if (sup_distance(moved[i], moved[j]) != sup_distance(functions[i], functions[j])) {
          report.add("sup-isometry", {gid, static_cast<int>(i), static_cast<int>(j)});
        }
      }
    }
    for (int x = 0; x < space_.size(); ++x) {
      if (apply(g, kuratowski[x]) != kuratowski[g(x)]) report.add("equivariance", {gid, x});
    }
  }
  return report;
}

namespace {

std::size_t distinct_profiles(const FiniteMetricSpace& space, std::span<const Dist> f) {
  const int n = space.size();
  std::set<std::vector<Dist>> profiles;
  for (int x = 0; x < n; ++x) {
    auto p = space.profile(x);
    p.insert(std::upper_bound(p.begin(), p.end(), f[x]), f[x]);
    profiles.insert(std::move(p));
  }
  std::vector<Dist> fresh(f.begin(), f.end());
  fresh.push_back(0);
  std::sort(fresh.begin(), fresh.end());
  profiles.insert(std::move(fresh));
  return profiles.size();
}

std::string fresh_label(const FiniteMetricSpace& space, int& counter) {
  for (;;) {
    std::string label = "g" + std::to_string(++counter);
    const auto& labels = space.labels();
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) return label;
  }
}

}  // namespace

GrowthResult grow_fragment(const FiniteMetricSpace& seed, const DistanceValueSet& value_set, int steps,
                           const GrowthOptions& options) {
  if (steps < 0) throw InvalidInput("steps must be non-negative");
  GrowthResult result{seed, 0, {}};
  if (steps == 0) return result;
  Dist bound = options.bound;
  if (bound <= 0) {
    const auto top = value_set.max_value();
    if (!top) throw InvalidInput("an explicit bound is required for an unbounded value set");
    bound = *top;
  }
  std::mt19937_64 rng(options.seed);
  int counter = 0;
  FiniteMetricSpace current =
      FiniteMetricSpace::unchecked(seed.name(), seed.labels(), seed.scale(), seed.flat(), value_set);
  ValidationReport seed_report = validate_space(current.matrix(), current.scale(), value_set);
  if (!seed_report.ok()) throw InvalidSpace(std::move(seed_report));
  for (int step = 0; step < steps; ++step) {
    const auto candidates = enumerate_katetov(current, value_set, bound);
    if (candidates.empty()) {
      result.notice = "no admissible extension after " + std::to_string(step) + " steps";
      break;
    }
    std::size_t pick = 0;
    if (options.strategy == GrowthStrategy::uniform) {
      pick = static_cast<std::size_t>(rng() % candidates.size());
    } else {
      std::size_t best = 0;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const std::size_t score = distinct_profiles(current, candidates[i]);
        if (score > best) {
          best = score;
          pick = i;
        }
      }
    }
    current = one_point_extension(current, candidates[pick], fresh_label(current, counter));
    ++result.steps_taken;
  }
  const auto report = validate_space(current.matrix(), current.scale(), current.value_set());
  if (!report.ok()) throw ConsistencyError("grown fragment is not a metric space:\n" + report.to_string());
  result.space = std::move(current);
  return result;
}

}  // namespace urysohn
