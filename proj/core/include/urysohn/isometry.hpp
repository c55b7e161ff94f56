#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "urysohn/metric_space.hpp"
#include "urysohn/partial_isometry.hpp"
#include "urysohn/permutation.hpp"

namespace urysohn {

/// Some isometry g of the space with g(from) = to for every pair, found by backtracking.
std::optional<Permutation> find_extension(const FiniteMetricSpace& space,
                                          std::span<const std::pair<int, int>> fixed);
std::optional<Permutation> find_extension(const FiniteMetricSpace& space, const PartialIsometry& p);

/// Full isometry group, generated along a stabilizer chain of the points in index order.
PermutationGroup compute_isometry_group(const FiniteMetricSpace& space);

/// Every isometry, sorted. Throws Error past `limit`.
std::vector<Permutation> enumerate_isometries(const FiniteMetricSpace& space, std::size_t limit = 1'000'000);

struct TransitivityResult {
  bool holds = true;
  std::optional<PartialIsometry> counterexample;
};

/// Checks that every isometry between `n`-point subsets is matched by a group element,
/// exactly when `epsilon` is empty and up to distance < epsilon otherwise.
/// The counterexample is the first failure in canonical partial-isometry order.
TransitivityResult check_almost_transitive(const FiniteMetricSpace& space, const PermutationGroup& group, int n,
                                           const std::optional<Rational>& epsilon = std::nullopt);

}  // namespace urysohn
