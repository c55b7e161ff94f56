#include "urysohn/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "urysohn/norms.hpp"

namespace urysohn {

void require_exponent(double p) {
  if (std::isnan(p) || p < 1.0) throw InvalidInput("exponent must be at least 1");
}

double p_norm(std::span<const double> x, double p) {
  require_exponent(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : x) sum += std::pow(std::abs(v) / scale, p);
  return scale * std::pow(sum, 1.0 / p);
}

double p_distance(std::span<const double> x, std::span<const double> y, double p) {
  if (x.size() != y.size()) throw InvalidInput("vectors have different dimensions");
  std::vector<double> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return p_norm(diff, p);
}

double dual_exponent(double p) {
  require_exponent(p);
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInfinity;
  return p / (p - 1.0);
}

EmbeddingEnvelope empirical_envelopes(const FiniteMetricSpace& space, const std::vector<std::vector<double>>& images,
                                      double p) {
  require_exponent(p);
  if (static_cast<int>(images.size()) != space.size()) throw InvalidInput("one image per point is required");
  std::map<Dist, std::pair<double, double>> table;
  for (int i = 0; i < space.size(); ++i) {
    for (int j = i + 1; j < space.size(); ++j) {
      const double v = p_distance(images[i], images[j], p);
      auto [it, inserted] = table.try_emplace(space.d(i, j), v, v);
      if (!inserted) {
        it->second.first = std::min(it->second.first, v);
        it->second.second = std::max(it->second.second, v);
      }
    }
  }
  EmbeddingEnvelope env;
  for (const auto& [r, mm] : table) {
    env.distances.push_back(r);
    env.raw_min.push_back(mm.first);
    env.raw_max.push_back(mm.second);
    if (mm.first == 0.0) env.degenerate = true;
  }
  const std::size_t k = env.distances.size();
  env.rho1.resize(k);
  env.rho2.resize(k);
  for (std::size_t i = k; i-- > 0;) env.rho1[i] = i + 1 < k ? std::min(env.raw_min[i], env.rho1[i + 1]) : env.raw_min[i];
  for (std::size_t i = 0; i < k; ++i) env.rho2[i] = i ? std::max(env.raw_max[i], env.rho2[i - 1]) : env.raw_max[i];
  return env;
}

}  // namespace urysohn
