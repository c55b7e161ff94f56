#pragma once

#include <optional>
#include <vector>

#include "urysohn/types.hpp"

namespace urysohn {

using ExactVector = std::vector<Rational>;

/// Convex weights expressing `x` as a combination of `points`, found by an exact
/// phase-one simplex with Bland's rule. Empty when x lies outside the hull.
std::optional<std::vector<Rational>> convex_weights(const ExactVector& x, const std::vector<ExactVector>& points);

bool in_convex_hull(const ExactVector& x, const std::vector<ExactVector>& points);

std::vector<double> to_double(const ExactVector& v);
Rational squared_norm(const ExactVector& v);
ExactVector subtract(const ExactVector& a, const ExactVector& b);

}  // namespace urysohn
