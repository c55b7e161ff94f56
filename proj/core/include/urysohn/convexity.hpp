#pragma once

#include <cstdint>
#include <vector>

namespace urysohn {

/// 1 - sqrt(1 - eps^2 / 4).
double delta_l2(double eps);
/// sqrt(1 + tau^2) - 1.
double rho_l2(double tau);

struct ConvexityPoint {
  double eps = 0.0;
  double delta = 0.0;
  /// Unit vectors attaining the estimate: ||x - y|| = eps and delta = 1 - ||(x + y) / 2||.
  std::vector<double> x;
  std::vector<double> y;
  /// 1 - sqrt(1 - eps^2 / 4) when p = 2, else NaN.
  double closed_form = 0.0;
};

/// Estimates delta(eps) = inf{1 - ||(x + y) / 2|| : ||x|| = ||y|| = 1, ||x - y|| >= eps} in
/// l^p_dim by searching unit circles of the coordinate plane and of `planes` random planes.
/// The infimum is taken on the boundary ||x - y|| = eps.
std::vector<ConvexityPoint> modulus_convexity(double p, int dim, const std::vector<double>& eps_grid,
                                              std::uint64_t seed = 0, int planes = 2);

struct SmoothnessPoint {
  double tau = 0.0;
  double rho = 0.0;
  double ratio = 0.0;
  std::vector<double> x;
  std::vector<double> h;
  double closed_form = 0.0;
};

/// Estimates rho(tau) = sup{(||x + tau h|| + ||x - tau h||) / 2 - 1 : ||x|| = ||h|| = 1}.
std::vector<SmoothnessPoint> modulus_smoothness(double p, int dim, const std::vector<double>& tau_grid,
                                                std::uint64_t seed = 0, int planes = 2);

/// The norm-one functional f with f(x) = ||x||_p, f_i = sign(x_i)|x_i|^(p-1) / ||x||^(p-1).
/// Refuses p = 1, p = infinity and x = 0.
std::vector<double> support_functional(double p, const std::vector<double>& x);

struct SupportDiagnostics {
  /// | ||f||_q - 1 |
  double dual_norm_error = 0.0;
  /// | f(x) - ||x||_p |
  double norming_error = 0.0;
  /// Smallest relative deficit (||x|| - g(x)) / ||x|| over perturbed norm-one functionals g.
  double uniqueness_margin = 0.0;
};

SupportDiagnostics check_support_functional(double p, const std::vector<double>& x, const std::vector<double>& f,
                                            std::uint64_t seed = 0, int trials = 32);

}  // namespace urysohn
