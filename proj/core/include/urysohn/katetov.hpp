#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "urysohn/metric_space.hpp"
#include "urysohn/permutation.hpp"

namespace urysohn {

/// Values of a function on the points of a fixed base space, in scaled units.
using KatetovFunction = std::vector<Dist>;

/// Reports every pair violating |f(x) - f(y)| <= d(x,y) <= f(x) + f(y).
/// Throws InvalidInput on a length mismatch or a negative entry.
ValidationReport validate_katetov(const FiniteMetricSpace& space, std::span<const Dist> f);

/// Adds one point at distances f. Refuses invalid f, zero values and values outside
/// the value set of the space.
FiniteMetricSpace one_point_extension(const FiniteMetricSpace& space, std::span<const Dist> f, std::string label);

/// Every Katetov function with values in value_set between its smallest positive value
/// and `bound`, in lexicographic order.
std::vector<KatetovFunction> enumerate_katetov(const FiniteMetricSpace& space, const DistanceValueSet& value_set,
                                               Dist bound);

struct ControlledExtension {
  KatetovFunction values;
  /// Validation on the whole space; the lower bound can fail and is reported here.
  ValidationReport report;
};

/// Largest 1-Lipschitz extension f(x) = min over a in A of f_A(a) + d(a, x).
ControlledExtension controlled_extension(const FiniteMetricSpace& space, std::span<const int> subset,
                                         std::span<const Dist> values_on_subset);

Dist sup_distance(std::span<const Dist> f, std::span<const Dist> g);

struct KuratowskiEmbedding {
  std::vector<KatetovFunction> images;
  ValidationReport report;
};

/// x -> d(x, -), checked to be isometric for the sup metric.
KuratowskiEmbedding kuratowski_embed(const FiniteMetricSpace& space);

/// Action of a group of isometries on functions: (g.f)(x) = f(g^-1 x).
class LiftedAction {
 public:
  /// Throws InvalidInput if a generator is not an isometry.
  LiftedAction(const FiniteMetricSpace& space, PermutationGroup group);

  KatetovFunction apply(const Permutation& g, std::span<const Dist> f) const;
  /// Checks that generators map the list into itself, preserve sup distances,
  /// and move Kuratowski images as the points move.
  ValidationReport check(const std::vector<KatetovFunction>& functions) const;
  const PermutationGroup& group() const noexcept { return group_; }

 private:
  const FiniteMetricSpace& space_;
  PermutationGroup group_;
};

enum class GrowthStrategy { uniform, coverage };

struct GrowthOptions {
  Dist bound = 0;
  std::uint64_t seed = 0;
  GrowthStrategy strategy = GrowthStrategy::uniform;
};

struct GrowthResult {
  FiniteMetricSpace space;
  int steps_taken = 0;
  /// Non-empty when growth stopped early.
  std::string notice;
};

/// Adds `steps` one-point extensions. Uniform picks a random enumerated function; coverage
/// picks the function maximizing the number of distinct distance profiles, first in
/// lexicographic order on ties. Deterministic for a given seed.
GrowthResult grow_fragment(const FiniteMetricSpace& seed, const DistanceValueSet& value_set, int steps,
                           const GrowthOptions& options);

}  // namespace urysohn
