#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urysohn/metric_space.hpp"
#include "urysohn/partial_isometry.hpp"
#include "urysohn/permutation.hpp"
#include "urysohn/quotient.hpp"

namespace urysohn {

enum class Provenance { quotient, brute_force, manual };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct Extension {
  PartialIsometry partial;
  Permutation global;
};

struct SearchStats {
  std::uint64_t attempts = 0;
  std::uint64_t candidates = 0;
  int omega_tried = 0;
  int omega = 0;
  /// Largest d_X - path distance seen on a rejected action (0 when none was rejected).
  Dist best_defect = 0;
  double elapsed_s = 0.0;
  std::uint64_t seed = 0;
  bool budget_exhausted = false;
  std::string note;
};

/// Z together with an isometric copy of X in which every partial isometry of X extends.
struct EppaWitness {
  FiniteMetricSpace base;
  FiniteMetricSpace witness;
  std::vector<int> embed;
  std::vector<Extension> extensions;
  Provenance provenance = Provenance::manual;
  SearchStats stats;
};

/// Checks the embedding, each extension, and that every partial isometry of X is covered.
ValidationReport verify_witness(const EppaWitness& w);

/// Builds the extensions of every partial isometry of X by isometry search in Z.
/// Returns nothing when some partial isometry does not extend.
std::optional<EppaWitness> assemble_witness(const FiniteMetricSpace& x, const FiniteMetricSpace& z,
                                            std::vector<int> embed, Provenance provenance);

struct BruteForceOptions {
  int max_size = 0;
  DistanceValueSet value_set = DistanceValueSet::integers(1);
  Dist distance_bound = 0;
  std::uint64_t max_candidates = 500'000;
};

struct SearchOutcome {
  std::optional<EppaWitness> witness;
  SearchStats stats;
};

/// Enumerates one-point extension chains of X up to `max_size` points, pruned by a canonical
/// form over the added points, and returns the first witness found (smallest size first).
SearchOutcome brute_force_witness(const FiniteMetricSpace& x, const BruteForceOptions& options);

enum class QuotientStrategy { greedy, randomized };

struct QuotientBudget {
  int max_omega = 16;
  std::uint64_t max_attempts = 2'000'000;
  std::uint64_t seed = 0;
  double time_limit_s = 60.0;
  QuotientStrategy strategy = QuotientStrategy::greedy;
};

/// Searches free group actions on omega = {0..W-1} with phi(a) = a: each letter's partial
/// permutation of phi(X) is completed to a permutation of omega, reusing the group generated
/// so far when it already contains an extension, and pruning completions whose pair orbits
/// shorten a distance of X. The witness is the metric quotient of the orbit.
SearchOutcome search_witness_quotient(const FiniteMetricSpace& x, const QuotientBudget& budget);

/// Turns an accepted action without bad configurations into a witness.
/// Throws InvalidInput when the action is rejected.
EppaWitness witness_from_quotient(const QuotientAction& action);

struct SimpleGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int u, int v) const;
};

/// Adjacent pairs at distance 1, the others at distance 2.
FiniteMetricSpace graph_metric(const SimpleGraph& g);
/// Distance-1 pairs become edges.
SimpleGraph decode_graph(const FiniteMetricSpace& space);

struct GraphWitness {
  EppaWitness metric;
  SimpleGraph graph;
};

/// Quotient search first, brute force as fallback. Throws Error when both fail.
GraphWitness graph_eppa(const SimpleGraph& g, const QuotientBudget& budget, int brute_force_extra_points = 3);

struct Tower {
  std::vector<FiniteMetricSpace> levels;
  std::vector<EppaWitness> steps;
  /// groups[i] acts on levels[i + 1] and is generated by the extensions of steps[i].
  std::vector<PermutationGroup> groups;
  /// compatibility[i][j]: element of groups[i + 1] restricting to generator j of groups[i].
  std::vector<std::vector<Permutation>> compatibility;
  std::string failure;
};

Tower build_tower(const FiniteMetricSpace& x, int levels, const QuotientBudget& budget);
ValidationReport verify_tower(const Tower& tower);

/// Searches for a witness among finite subsets of the integer line containing the given
/// points, with at most `max_size` points and coordinates in [-radius, radius].
std::optional<std::vector<Dist>> line_witness_search(const std::vector<Dist>& points, int max_size, Dist radius);

}  // namespace urysohn
