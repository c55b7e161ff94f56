#include "urysohn/convexity.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "urysohn/norms.hpp"
#include "urysohn/types.hpp"

namespace urysohn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Plane {
  std::vector<double> u;
  std::vector<double> v;
};

std::vector<Plane> search_planes(int dim, std::uint64_t seed, int planes) {
  if (dim < 2) throw InvalidInput("dimension must be at least 2");
  std::vector<Plane> out;
  Plane coordinate{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
  coordinate.u[0] = 1.0;
  coordinate.v[1] = 1.0;
  out.push_back(coordinate);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int i = 0; i < planes && dim > 2; ++i) {
    Plane plane{std::vector<double>(dim), std::vector<double>(dim)};
    for (int k = 0; k < dim; ++k) {
      plane.u[k] = normal(rng);
      plane.v[k] = normal(rng);
    }
    out.push_back(plane);
  }
  return out;
}

std::vector<double> circle_point(const Plane& plane, double theta, double p) {
  std::vector<double> c(plane.u.size());
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = cs * plane.u[k] + sn * plane.v[k];
  const double n = p_norm(c, p);
  for (auto& x : c) x /= n;
  return c;
}

double distance(const std::vector<double>& x, const std::vector<double>& y, double p) { return p_distance(x, y, p); }

double midpoint_norm(const std::vector<double>& x, const std::vector<double>& y, double p) {
  std::vector<double> m(x.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = 0.5 * (x[k] + y[k]);
  return p_norm(m, p);
}

/// Minimizes f on [lo, hi] by golden-section search.
double golden_minimize(const std::function<double(double)>& f, double lo, double hi, int steps = 80) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < steps; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

struct DeltaCandidate {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> x;
  std::vector<double> y;
};

/// Best partner of x = circle(theta) at distance eps, searched on both sides of x.
DeltaCandidate delta_at(const Plane& plane, double theta, double eps, double p) {
  DeltaCandidate best;
  const std::vector<double> x = circle_point(plane, theta, p);
  if (eps >= 2.0 && p > 1.0 && !std::isinf(p)) {
    // Strict convexity leaves y = -x as the only partner.
    best.value = 1.0;
    best.x = x;
    best.y = x;
    for (auto& v : best.y) v = -v;
    return best;
  }
  for (double side : {1.0, -1.0}) {
    double lo = 0.0;
    double hi = std::numbers::pi;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (distance(x, circle_point(plane, theta + side * mid, p), p) < eps) lo = mid;
      else hi = mid;
    }
    std::vector<double> y = circle_point(plane, theta + side * hi, p);
    const double value = 1.0 - midpoint_norm(x, y, p);
    if (value < best.value) {
      best.value = value;
      best.x = x;
      best.y = std::move(y);
    }
  }
  return best;
}

}  // namespace

double delta_l2(double eps) { return 1.0 - std::sqrt(std::max(0.0, 1.0 - eps * eps / 4.0)); }

double rho_l2(double tau) { return std::sqrt(1.0 + tau * tau) - 1.0; }

std::vector<ConvexityPoint> modulus_convexity(double p, int dim, const std::vector<double>& eps_grid,
                                              std::uint64_t seed, int planes) {
  require_exponent(p);
  const std::vector<Plane> plane_list = search_planes(dim, seed, planes);
  std::vector<ConvexityPoint> table;
  for (double eps : eps_grid) {
    if (!(eps > 0.0 && eps <= 2.0)) throw InvalidInput("eps must lie in (0, 2]");
    ConvexityPoint point;
    point.eps = eps;
    point.closed_form = p == 2.0 ? delta_l2(eps) : std::numeric_limits<double>::quiet_NaN();
    DeltaCandidate best;
    for (const auto& plane : plane_list) {
      constexpr int kGrid = 720;
      int arg = 0;
      double arg_value = std::numeric_limits<double>::infinity();
      for (int i = 0; i < kGrid; ++i) {
        const DeltaCandidate c = delta_at(plane, kTwoPi * i / kGrid, eps, p);
        if (c.value < arg_value) {
          arg_value = c.value;
          arg = i;
        }
        if (c.value < best.value) best = c;
      }
      const double h = kTwoPi / kGrid;
      const double theta =
          golden_minimize([&](double t) { return delta_at(plane, t, eps, p).value; }, kTwoPi * arg / kGrid - h,
                          kTwoPi * arg / kGrid + h);
      const DeltaCandidate refined = delta_at(plane, theta, eps, p);
      if (refined.value < best.value) best = refined;
    }
    point.delta = std::max(0.0, best.value);
    point.x = best.x;
    point.y = best.y;
    table.push_back(std::move(point));
  }
  return table;
}

std::vector<SmoothnessPoint> modulus_smoothness(double p, int dim, const std::vector<double>& tau_grid,
                                                std::uint64_t seed, int planes) {
  require_exponent(p);
  const std::vector<Plane> plane_list = search_planes(dim, seed, planes);
  std::vector<SmoothnessPoint> table;
  for (double tau : tau_grid) {
    if (!(tau > 0.0)) throw InvalidInput("tau must be positive");
    SmoothnessPoint point;
    point.tau = tau;
    point.closed_form = p == 2.0 ? rho_l2(tau) : std::numeric_limits<double>::quiet_NaN();
    point.rho = -std::numeric_limits<double>::infinity();
    for (const auto& plane : plane_list) {
      auto value = [&](double a, double b) {
        const std::vector<double> x = circle_point(plane, a, p);
        const std::vector<double> h = circle_point(plane, b, p);
        std::vector<double> plus(x.size());
        std::vector<double> minus(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) {
          plus[k] = x[k] + tau * h[k];
          minus[k] = x[k] - tau * h[k];
        }
        return 0.5 * (p_norm(plus, p) + p_norm(minus, p)) - 1.0;
      };
      constexpr int kGrid = 180;
      double ba = 0.0;
      double bb = 0.0;
      double bv = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
          const double a = kTwoPi * i / kGrid;
          const double b = kTwoPi * j / kGrid;
          const double v = value(a, b);
          if (v > bv) {
            bv = v;
            ba = a;
            bb = b;
          }
        }
      }
      double h = kTwoPi / kGrid;
      for (int round = 0; round < 6; ++round) {
        ba = golden_minimize([&](double t) { return -value(t, bb); }, ba - h, ba + h, 50);
        bb = golden_minimize([&](double t) { return -value(ba, t); }, bb - h, bb + h, 50);
        h *= 0.5;
      }
      bv = std::max(bv, value(ba, bb));
      if (bv > point.rho) {
        point.rho = bv;
        point.x = circle_point(plane, ba, p);
        point.h = circle_point(plane, bb, p);
      }
    }
    point.ratio = point.rho / tau;
    table.push_back(std::move(point));
  }
  return table;
}

std::vector<double> support_functional(double p, const std::vector<double>& x) {
  require_exponent(p);
  if (p == 1.0 || std::isinf(p)) throw InvalidInput("the support functional is not unique for p = 1 or infinity");
  const double n = p_norm(x, p);
  if (n == 0.0) throw InvalidInput("the support functional of 0 is undefined");
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double y = x[i] / n;
    f[i] = std::copysign(std::pow(std::abs(y), p - 1.0), y);
    if (y == 0.0) f[i] = 0.0;
  }
  return f;
}

SupportDiagnostics check_support_functional(double p, const std::vector<double>& x, const std::vector<double>& f,
                                            std::uint64_t seed, int trials) {
  if (x.size() != f.size()) throw InvalidInput("functional and vector have different dimensions");
  const double q = dual_exponent(p);
  const double n = p_norm(x, p);
  auto apply = [&](const std::vector<double>& g) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += g[i] * x[i];
    return s;
  };
  SupportDiagnostics out;
  out.dual_norm_error = std::abs(p_norm(f, q) - 1.0);
  out.norming_error = std::abs(apply(f) - n);
  out.uniqueness_margin = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> g = f;
    for (auto& v : g) v += 1e-3 * normal(rng);
    const double gn = p_norm(g, q);
    for (auto& v : g) v /= gn;
    out.uniqueness_margin = std::min(out.uniqueness_margin, (n - apply(g)) / n);
  }
  return out;
}

}  // namespace urysohn
