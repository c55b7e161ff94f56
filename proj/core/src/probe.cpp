#include "urysohn/probe.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "urysohn/convexity.hpp"
#include "urysohn/hull.hpp"
#include "urysohn/parallel.hpp"

namespace urysohn {

namespace {

Rational rational_below(double v) {
  const double scaled = std::floor(v * (1.0 - 1e-9) * 1e12);
  return Rational(static_cast<long long>(std::max(scaled, 0.0)), 1'000'000'000'000LL);
}

Rational rational_above(double v) {
  return Rational(static_cast<long long>(std::ceil(v * (1.0 + 1e-9) * 1e12)) + 1, 1'000'000'000'000LL);
}

}  // namespace

long long tree_depth_bound(double gamma, double radius) {
  if (gamma <= 0.0) return -1;
  if (gamma > 2.0 * radius) return 0;
  const double delta = delta_l2(std::min(gamma / radius, 2.0));
  if (delta <= 0.0) return -1;
  if (delta >= 1.0) return 1;
  const double r0 = gamma / 2.0;
  return 1 + static_cast<long long>(std::floor(std::log(radius / r0) / -std::log1p(-delta) + 1e-12));
}

TreeCertificate convexity_probe(const SphereWitness& witness, const TEpsilonRealization& realization,
                                const Embedding& embedding, const std::string& embedding_id, int workers) {
  const int n = witness.n;
  if (static_cast<int>(realization.points.size()) != (1 << n)) throw InvalidInput("realization does not match the witness");
  TreeCertificate out;
  out.depth = n;
  out.m = witness.m;
  out.k = witness.k;
  out.fragment_id = witness.fragment.name();
  out.embedding_id = embedding_id;

  const FiniteMetricSpace& space = realization.space;
  std::vector<ExactVector> images;
  std::size_t dim = 0;
  for (const auto& [bits, idx] : realization.points) {
    const auto it = embedding.find(space.label(idx));
    if (it == embedding.end()) throw InvalidInput("embedding is missing witness point '" + space.label(idx) + "'");
    if (images.empty()) dim = it->second.size();
    if (it->second.size() != dim) throw InvalidInput("embedding vectors have different dimensions");
    out.t_eps.push_back(bits);
    images.push_back(it->second);
  }
  ExactVector center(dim, 0);
  if (const auto z = embedding.find(space.label(witness.z0)); z != embedding.end()) {
    if (z->second.size() != dim) throw InvalidInput("embedding vectors have different dimensions");
    center = z->second;
  }
  for (auto& v : images) v = subtract(v, center);

  // Heap index i holds C_s for s = heap_address(i); the witness points are in lexicographic order.
  const std::size_t size = std::size_t{1} << (n + 1);
  std::vector<std::vector<ExactVector>> sets(size);
  for (std::size_t i = 1; i < size; ++i) {
    const std::string prefix = heap_address(i);
    for (std::size_t w = 0; w < images.size(); ++w) {
      if (out.t_eps[w].compare(0, prefix.size(), prefix) == 0) sets[i].push_back(images[w]);
    }
  }
  for (const auto& v : images) out.radius = std::max(out.radius, std::sqrt(squared_norm(v).convert_to<double>()));

  const std::size_t internal = (std::size_t{1} << n) - 1;
  std::vector<double> separation(internal + 1, 0.0);
  parallel_for(internal, workers, [&](std::size_t j) {
    const std::size_t i = j + 1;
    std::vector<std::vector<double>> left;
    std::vector<std::vector<double>> right;
    for (const auto& v : sets[2 * i]) left.push_back(to_double(v));
    for (const auto& v : sets[2 * i + 1]) right.push_back(to_double(v));
    separation[i] = hull_separation(left, right).distance;
  });
  out.level_separation.assign(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 1; i <= internal; ++i) {
    const std::size_t level = heap_address(i).size();
    out.level_separation[level] = std::min(out.level_separation[level], separation[i]);
  }
  out.gamma_hat = internal == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  for (double s : out.level_separation) out.gamma_hat = std::min(out.gamma_hat, s);
  out.degenerate = out.gamma_hat <= 1e-12;

  if (!witness.a.empty() && !witness.b.empty()) {
    const auto a = embedding.find(space.label(witness.a.front()));
    const auto b = embedding.find(space.label(witness.b.front()));
    if (a != embedding.end() && b != embedding.end() && a->second.size() == b->second.size()) {
      const std::vector<double> diff = to_double(subtract(a->second, b->second));
      bool nonzero = false;
      for (double v : diff) nonzero = nonzero || v != 0.0;
      if (nonzero) out.support = support_functional(2.0, diff);
    }
  }

  if (out.degenerate) {
    out.note = "sibling hulls meet";
    return out;
  }
  out.delta = out.radius > 0.0 ? delta_l2(std::min(out.gamma_hat / out.radius, 2.0)) : 0.0;
  out.depth_bound = tree_depth_bound(out.gamma_hat, out.radius);
  try {
    out.tree = tree_from_nested_sets(sets, rational_below(out.gamma_hat), rational_above(out.radius));
    out.eps_claimed = out.tree->eps.convert_to<double>();
  } catch (const InvalidInput& e) {
    out.note = e.what();
  }
  return out;
}

Embedding kuratowski_coordinates(const FiniteMetricSpace& space, int fragment_size) {
  if (fragment_size < 0 || fragment_size > space.size()) throw InvalidInput("fragment size out of range");
  Embedding out;
  for (int i = 0; i < space.size(); ++i) {
    ExactVector v;
    v.reserve(fragment_size);
    for (int j = 0; j < fragment_size; ++j) v.emplace_back(Rational(space.d(i, j), space.scale()));
    out.emplace(space.label(i), std::move(v));
  }
  return out;
}

std::string probe_summary(const TreeCertificate& c) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, "depth=%d gamma_hat=%.6f radius=%.6f bound=%lld degenerate=%d tree=%d", c.depth,
                c.gamma_hat, c.radius, c.depth_bound, c.degenerate ? 1 : 0, c.tree ? 1 : 0);
  return buffer;
}

}  // namespace urysohn
