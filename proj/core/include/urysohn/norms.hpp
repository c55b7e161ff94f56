#pragma once

#include <limits>
#include <span>
#include <vector>

namespace urysohn {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// l^p norm for p in [1, inf].
double p_norm(std::span<const double> x, double p);
double p_distance(std::span<const double> x, std::span<const double> y, double p);
/// Conjugate exponent q with 1/p + 1/q = 1.
double dual_exponent(double p);
/// Throws InvalidInput unless p >= 1 (infinity allowed).
void require_exponent(double p);

}  // namespace urysohn
