#include "urysohn/hull.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "urysohn/convexity.hpp"
#include "urysohn/norms.hpp"
#include "urysohn/types.hpp"

namespace urysohn {

namespace {

void require_points(const std::vector<std::vector<double>>& points, std::size_t dim) {
  if (points.empty()) throw InvalidInput("point list is empty");
  for (const auto& p : points) {
    if (p.size() != dim) throw InvalidInput("points have different dimensions");
  }
}

std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> s = v;
  std::sort(s.begin(), s.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    cumulative += s[i];
    const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (s[i] - t > 0.0) theta = t;
  }
  for (auto& x : v) x = std::max(0.0, x - theta);
  return v;
}

std::vector<double> combine(const std::vector<std::vector<double>>& points, const std::vector<double>& w) {
  std::vector<double> out(points.front().size(), 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (w[i] == 0.0) continue;
    for (std::size_t d = 0; d < out.size(); ++d) out[d] += w[i] * points[i][d];
  }
  return out;
}

std::vector<double> norm_subgradient(double p, const std::vector<double>& d) {
  if (p > 1.0 && !std::isinf(p)) return support_functional(p, d);
  std::vector<double> s(d.size(), 0.0);
  if (std::isinf(p)) {
    std::size_t arg = 0;
    for (std::size_t k = 1; k < d.size(); ++k) {
      if (std::abs(d[k]) > std::abs(d[arg])) arg = k;
    }
    s[arg] = d[arg] > 0 ? 1.0 : -1.0;
  } else {
    for (std::size_t k = 0; k < d.size(); ++k) s[k] = d[k] > 0 ? 1.0 : (d[k] < 0 ? -1.0 : 0.0);
  }
  return s;
}

}  // namespace

std::vector<double> min_norm_point(const std::vector<std::vector<double>>& points, std::vector<double>* weights,
                                   int* iterations) {
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  require_points(points, dim);
  const std::size_t n = points.size();
  Eigen::MatrixXd P(dim, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < dim; ++d) P(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(i)) = points[i][d];
  }
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, P.col(static_cast<Eigen::Index>(i)).squaredNorm());
  const double tol = 1e-14 * std::max(scale, 1.0);

  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (P.col(static_cast<Eigen::Index>(i)).squaredNorm() < P.col(static_cast<Eigen::Index>(start)).squaredNorm()) {
      start = i;
    }
  }
  std::vector<std::size_t> active{start};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd x = P.col(static_cast<Eigen::Index>(start));
  int steps = 0;
  for (; steps < 10000; ++steps) {
    const Eigen::VectorXd dots = P.transpose() * x;
    Eigen::Index j = 0;
    dots.minCoeff(&j);
    if (x.squaredNorm() - dots(j) <= tol) break;
    if (std::find(active.begin(), active.end(), static_cast<std::size_t>(j)) != active.end()) break;
    active.push_back(static_cast<std::size_t>(j));
    lambda.push_back(0.0);
    for (;;) {
      const auto k = static_cast<Eigen::Index>(active.size());
      Eigen::MatrixXd system = Eigen::MatrixXd::Zero(k + 1, k + 1);
      for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) {
          system(r, c) = P.col(static_cast<Eigen::Index>(active[r])).dot(P.col(static_cast<Eigen::Index>(active[c])));
        }
        system(r, k) = 1.0;
        system(k, r) = 1.0;
      }
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
      rhs(k) = 1.0;
      const Eigen::VectorXd mu = system.completeOrthogonalDecomposition().solve(rhs);
      bool interior = true;
      for (Eigen::Index r = 0; r < k; ++r) interior = interior && mu(r) > 1e-12;
      if (interior) {
        for (Eigen::Index r = 0; r < k; ++r) lambda[static_cast<std::size_t>(r)] = mu(r);
        break;
      }
      double theta = 1.0;
      for (Eigen::Index r = 0; r < k; ++r) {
        const double l = lambda[static_cast<std::size_t>(r)];
        if (mu(r) <= 1e-12 && l - mu(r) > 0.0) theta = std::min(theta, l / (l - mu(r)));
      }
      std::vector<std::size_t> kept;
      std::vector<double> kept_lambda;
      for (Eigen::Index r = 0; r < k; ++r) {
        const double l = (1.0 - theta) * lambda[static_cast<std::size_t>(r)] + theta * mu(r);
        if (l > 1e-12) {
          kept.push_back(active[static_cast<std::size_t>(r)]);
          kept_lambda.push_back(l);
        }
      }
      if (kept.empty()) {
        kept.push_back(active.back());
        kept_lambda.push_back(1.0);
      }
      const double total = std::accumulate(kept_lambda.begin(), kept_lambda.end(), 0.0);
      for (auto& l : kept_lambda) l /= total;
      active = std::move(kept);
      lambda = std::move(kept_lambda);
      if (active.size() == 1) break;
    }
    x.setZero();
    for (std::size_t r = 0; r < active.size(); ++r) x += lambda[r] * P.col(static_cast<Eigen::Index>(active[r]));
  }
  x.setZero();
  for (std::size_t r = 0; r < active.size(); ++r) x += lambda[r] * P.col(static_cast<Eigen::Index>(active[r]));
  if (weights) {
    weights->assign(n, 0.0);
    for (std::size_t r = 0; r < active.size(); ++r) (*weights)[active[r]] = lambda[r];
  }
  if (iterations) *iterations = steps;
  return std::vector<double>(x.data(), x.data() + x.size());
}

HullSeparation hull_separation(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b,
                               double p) {
  require_exponent(p);
  const std::size_t dim = a.empty() ? 0 : a.front().size();
  require_points(a, dim);
  require_points(b, dim);
  std::vector<std::vector<double>> diff;
  diff.reserve(a.size() * b.size());
  for (const auto& u : a) {
    for (const auto& v : b) {
      std::vector<double> d(dim);
      for (std::size_t k = 0; k < dim; ++k) d[k] = u[k] - v[k];
      diff.push_back(std::move(d));
    }
  }
  HullSeparation out;
  std::vector<double> w;
  min_norm_point(diff, &w, &out.iterations);
  out.a_weights.assign(a.size(), 0.0);
  out.b_weights.assign(b.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out.a_weights[i] += w[i * b.size() + j];
      out.b_weights[j] += w[i * b.size() + j];
    }
  }
  if (p != 2.0) {
    auto value = [&](const std::vector<double>& wa, const std::vector<double>& wb) {
      return p_distance(combine(a, wa), combine(b, wb), p);
    };
    std::vector<double> wa = out.a_weights;
    std::vector<double> wb = out.b_weights;
    double best = value(wa, wb);
    std::vector<double> best_a = wa;
    std::vector<double> best_b = wb;
    for (int it = 1; it <= 20000; ++it) {
      const std::vector<double> pa = combine(a, wa);
      const std::vector<double> pb = combine(b, wb);
      std::vector<double> d(dim);
      for (std::size_t k = 0; k < dim; ++k) d[k] = pa[k] - pb[k];
      if (p_norm(d, p) == 0.0) break;
      const std::vector<double> g = norm_subgradient(p, d);
      std::vector<double> ga(a.size(), 0.0);
      std::vector<double> gb(b.size(), 0.0);
      double largest = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < dim; ++k) ga[i] += g[k] * a[i][k];
        largest = std::max(largest, std::abs(ga[i]));
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t k = 0; k < dim; ++k) gb[j] -= g[k] * b[j][k];
        largest = std::max(largest, std::abs(gb[j]));
      }
      if (largest == 0.0) break;
      const double step = 0.5 / std::sqrt(static_cast<double>(it)) / largest;
      for (std::size_t i = 0; i < a.size(); ++i) wa[i] -= step * ga[i];
      for (std::size_t j = 0; j < b.size(); ++j) wb[j] -= step * gb[j];
      wa = project_simplex(wa);
      wb = project_simplex(wb);
      const double v = value(wa, wb);
      if (v < best) {
        best = v;
        best_a = wa;
        best_b = wb;
      }
    }
    out.a_weights = best_a;
    out.b_weights = best_b;
  }
  out.a_point = combine(a, out.a_weights);
  out.b_point = combine(b, out.b_weights);
  std::vector<double> d(dim);
  for (std::size_t k = 0; k < dim; ++k) d[k] = out.a_point[k] - out.b_point[k];
  out.distance = p_norm(d, p);
  if (out.distance > 1e-12) {
    if (p == 2.0) {
      out.functional = d;
      for (auto& v : out.functional) v /= out.distance;
    } else if (p > 1.0 && !std::isinf(p)) {
      out.functional = support_functional(p, d);
    }
  }
  return out;
}

}  // namespace urysohn
