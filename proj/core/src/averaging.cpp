#include "urysohn/averaging.hpp"

#include <algorithm>
#include <cmath>

#include "urysohn/norms.hpp"

namespace urysohn {

namespace {

bool is_isometry(const FiniteMetricSpace& space, const Permutation& g) {
  if (g.degree() != space.size()) return false;
  for (int i = 0; i < space.size(); ++i) {
    for (int j = i + 1; j < space.size(); ++j) {
      if (space.d(g(i), g(j)) != space.d(i, j)) return false;
    }
  }
  return true;
}

template <class Value, class Distance>
void fill_table(const FiniteMetricSpace& space, Distance dist, bool& exists, std::map<Dist, Value>& table,
                std::optional<TransformViolation>& violation, const auto& equal) {
  std::map<Dist, std::pair<int, int>> first;
  exists = true;
  for (int i = 0; i < space.size(); ++i) {
    for (int j = i + 1; j < space.size(); ++j) {
      const Dist r = space.d(i, j);
      const Value v = dist(i, j);
      const auto it = table.find(r);
      if (it == table.end()) {
        table.emplace(r, v);
        first.emplace(r, std::pair{i, j});
      } else if (!equal(it->second, v)) {
        exists = false;
        violation = TransformViolation{first.at(r), {i, j}};
        table.clear();
        return;
      }
    }
  }
}

/// Exact squared-distance staircases: lower[r] = min over r' >= r, upper[r] = max over r' <= r.
std::pair<std::map<Dist, Rational>, std::map<Dist, Rational>> staircases(const std::map<Dist, std::pair<Rational, Rational>>& raw) {
  std::map<Dist, Rational> lower;
  std::map<Dist, Rational> upper;
  bool started = false;
  Rational running;
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    running = started ? std::min(running, it->second.first) : it->second.first;
    started = true;
    lower[it->first] = running;
  }
  started = false;
  for (const auto& [r, mm] : raw) {
    running = started ? std::max(running, mm.second) : mm.second;
    started = true;
    upper[r] = running;
  }
  return {lower, upper};
}

}  // namespace

int AveragedEmbedding::element_index(const Permutation& g) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) throw InvalidInput("permutation is not in the group");
  return static_cast<int>(it - elements.begin());
}

Rational AveragedEmbedding::squared_distance(int x, int y) const {
  if (p != 2.0) throw InvalidInput("exact distances require p = 2");
  Rational sum = 0;
  for (std::size_t g = 0; g < elements.size(); ++g) sum += squared_norm(subtract(blocks[x][g], blocks[y][g]));
  return sum / static_cast<long long>(elements.size());
}

double AveragedEmbedding::distance(int x, int y) const {
  double sum = 0.0;
  for (std::size_t g = 0; g < elements.size(); ++g) {
    const double n = p_distance(to_double(blocks[x][g]), to_double(blocks[y][g]), p);
    sum += n * n;
  }
  return std::sqrt(sum / static_cast<double>(elements.size()));
}

std::vector<double> AveragedEmbedding::psi(int x) const {
  const double factor = 1.0 / std::sqrt(static_cast<double>(elements.size()));
  std::vector<double> out;
  out.reserve(elements.size() * static_cast<std::size_t>(dim));
  for (const auto& block : blocks[x]) {
    for (const auto& v : block) out.push_back(factor * v.convert_to<double>());
  }
  return out;
}

std::vector<ExactVector> AveragedEmbedding::translate(const Permutation& h, int x) const {
  const Permutation h_inv = h.inverse();
  std::vector<ExactVector> out(elements.size());
  for (std::size_t g = 0; g < elements.size(); ++g) out[g] = blocks[x][element_index(h_inv * elements[g])];
  return out;
}

AveragedEmbedding average_map(const FiniteMetricSpace& space, const PermutationGroup& group,
                              const std::vector<ExactVector>& phi, double p, int base_point) {
  require_exponent(p);
  if (group.degree() != space.size()) throw InvalidInput("group degree differs from the space size");
  if (static_cast<int>(phi.size()) != space.size()) throw InvalidInput("phi must be defined at every point");
  if (base_point < 0 || base_point >= std::max(space.size(), 1)) throw InvalidInput("base point out of range");
  AveragedEmbedding out{space, group.elements(), p, 0, phi, {}, base_point};
  if (!phi.empty()) out.dim = static_cast<int>(phi.front().size());
  for (const auto& v : phi) {
    if (static_cast<int>(v.size()) != out.dim) throw InvalidInput("phi values have different dimensions");
  }
  for (const auto& g : out.elements) {
    if (!is_isometry(space, g)) throw InvalidInput("group element is not an isometry of the space");
  }
  out.blocks.assign(space.size(), std::vector<ExactVector>(out.elements.size()));
  for (std::size_t g = 0; g < out.elements.size(); ++g) {
    const Permutation g_inv = out.elements[g].inverse();
    for (int x = 0; x < space.size(); ++x) out.blocks[x][g] = phi[g_inv(x)];
  }
  return out;
}

ValidationReport check_averaging(const AveragedEmbedding& e) {
  ValidationReport report;
  const int n = e.space.size();
  for (std::size_t h = 0; h < e.elements.size(); ++h) {
    for (int x = 0; x < n; ++x) {
      if (e.translate(e.elements[h], x) != e.blocks[e.elements[h](x)]) {
        report.add("equivariance", {static_cast<int>(h), x}, "h psi(x) differs from psi(hx)");
      }
    }
  }
  const auto order = static_cast<long long>(e.elements.size());
  std::map<Dist, std::pair<Rational, Rational>> raw_phi;
  std::map<Dist, std::pair<Rational, Rational>> raw_psi;
  auto record = [](std::map<Dist, std::pair<Rational, Rational>>& raw, Dist r, const Rational& v) {
    auto [it, inserted] = raw.try_emplace(r, v, v);
    if (!inserted) {
      it->second.first = std::min(it->second.first, v);
      it->second.second = std::max(it->second.second, v);
    }
  };
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Rational direct = 0;
      for (const auto& g : e.elements) {
        const Permutation g_inv = g.inverse();
        direct += squared_norm(subtract(e.phi[g_inv(x)], e.phi[g_inv(y)]));
      }
      const Rational averaged = e.squared_distance(x, y);
      if (averaged * order != direct) {
        report.add("quadratic-mean", {x, y}, "|F| ||psi(x) - psi(y)||^2 differs from the sum over F");
      }
      record(raw_phi, e.space.d(x, y), squared_norm(subtract(e.phi[x], e.phi[y])));
      record(raw_psi, e.space.d(x, y), averaged);
    }
  }
  const auto [phi_lower, phi_upper] = staircases(raw_phi);
  const auto [psi_lower, psi_upper] = staircases(raw_psi);
  for (const auto& [r, v] : psi_lower) {
    if (v < phi_lower.at(r) || psi_upper.at(r) > phi_upper.at(r)) {
      report.add("envelope", {static_cast<int>(r)}, "psi leaves the envelope of phi at distance " + std::to_string(r));
    }
  }
  return report;
}

MetricTransform check_metric_transform(const FiniteMetricSpace& space, const std::vector<std::vector<double>>& images,
                                       double p, double tol) {
  require_exponent(p);
  if (static_cast<int>(images.size()) != space.size()) throw InvalidInput("one image per point is required");
  MetricTransform out;
  fill_table<double>(
      space, [&](int i, int j) { return p_distance(images[i], images[j], p); }, out.exists, out.table, out.violation,
      [&](double a, double b) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); });
  return out;
}

ExactMetricTransform check_metric_transform(const FiniteMetricSpace& space, const std::vector<ExactVector>& images) {
  if (static_cast<int>(images.size()) != space.size()) throw InvalidInput("one image per point is required");
  ExactMetricTransform out;
  fill_table<Rational>(
      space, [&](int i, int j) { return squared_norm(subtract(images[i], images[j])); }, out.exists,
      out.squared_table, out.violation, [](const Rational& a, const Rational& b) { return a == b; });
  return out;
}

ExactMetricTransform check_metric_transform(const AveragedEmbedding& embedding) {
  ExactMetricTransform out;
  fill_table<Rational>(
      embedding.space, [&](int i, int j) { return embedding.squared_distance(i, j); }, out.exists, out.squared_table,
      out.violation, [](const Rational& a, const Rational& b) { return a == b; });
  return out;
}

}  // namespace urysohn
