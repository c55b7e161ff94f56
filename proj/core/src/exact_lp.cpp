#include "urysohn/exact_lp.hpp"

namespace urysohn {

std::optional<std::vector<Rational>> convex_weights(const ExactVector& x, const std::vector<ExactVector>& points) {
  if (points.empty()) return std::nullopt;
  const std::size_t dim = x.size();
  const std::size_t k = points.size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InvalidInput("points have different dimensions");
  }
  const std::size_t rows = dim + 1;
  const std::size_t cols = k + rows;
  // Tableau [A | I | b] with rows sum_j w_j p_j = x and sum_j w_j = 1, signs flipped so b >= 0.
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) t[r][j] = r < dim ? points[j][r] : Rational(1);
    t[r][k + r] = 1;
    t[r][cols] = r < dim ? x[r] : Rational(1);
    if (t[r][cols] < 0) {
      for (std::size_t j = 0; j < k; ++j) t[r][j] = -t[r][j];
      t[r][cols] = -t[r][cols];
    }
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = k + r;
  std::vector<Rational> cost(cols + 1, 0);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= k && j < cols) continue;
    for (std::size_t r = 0; r < rows; ++r) cost[j] -= t[r][j];
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rational ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational factor = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= factor * t[leave][j];
    }
    const Rational factor = cost[enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= factor * t[leave][j];
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> weights(k, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < k) weights[basis[r]] = t[r][cols];
    else if (t[r][cols] != 0) return std::nullopt;
  }
  ExactVector check(dim, 0);
  Rational total = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (weights[j] < 0) throw ConsistencyError("negative convex weight");
    total += weights[j];
    for (std::size_t d = 0; d < dim; ++d) check[d] += weights[j] * points[j][d];
  }
  if (total != 1 || check != x) throw ConsistencyError("convex weights do not reproduce the point");
  return weights;
}

bool in_convex_hull(const ExactVector& x, const std::vector<ExactVector>& points) {
  return convex_weights(x, points).has_value();
}

std::vector<double> to_double(const ExactVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.convert_to<double>());
  return out;
}

Rational squared_norm(const ExactVector& v) {
  Rational s = 0;
  for (const auto& r : v) s += r * r;
  return s;
}

ExactVector subtract(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) throw InvalidInput("vectors have different dimensions");
  ExactVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace urysohn
