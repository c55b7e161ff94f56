#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "urysohn/eppa.hpp"
#include "urysohn/exact_lp.hpp"
#include "urysohn/metric_space.hpp"
#include "urysohn/quotient.hpp"

namespace oracle {

using urysohn::Dist;
using urysohn::FiniteMetricSpace;

/// Every metric space on 0..max_points points with distances in `values`, one per
/// isomorphism class (smallest flat matrix over all relabelings).
std::vector<FiniteMetricSpace> spaces_up_to_iso(int max_points, const std::vector<Dist>& values,
                                                const urysohn::DistanceValueSet& value_set);

/// Counts f: X -> {1..bound} with |f(x) - f(y)| <= d(x, y) <= f(x) + f(y) by scanning the grid.
std::size_t katetov_grid_count(const FiniteMetricSpace& space, Dist bound);

/// Random action on omega = {0..W-1} that maps phi(x) to phi(p x) for every letter p and
/// is random elsewhere, with phi injective and phi(a0) = 0. Such actions are accepted.
urysohn::QuotientAction random_accepted_action(const FiniteMetricSpace& space, int omega, std::mt19937_64& rng);

/// Literal bounded search for letters p, q and a chain x_1 p_1 = p, x_{i+1} p_{i+1} = x_i q_i,
/// x_n q_n = q modulo the base stabilizer with summed cost below d(p a0, q a0). Group
/// elements x_i enter only through the pair orbits they generate, computed here by
/// closing each pair under the letter permutations and their inverses.
bool definition_bad_configuration(const urysohn::QuotientAction& action);

/// Dihedral action on the 7-cycle with P4 placed on 0..3.
urysohn::QuotientAction cycle_action_p4();
/// C7 with the cycle metric, P4 embedded on 0..3, every extension found by search.
urysohn::EppaWitness cycle_witness_p4();

/// Minimum distance between two 2D convex hulls by sampling every segment between hull
/// points on a grid and projecting onto the segments of the other side.
double sampled_hull_distance(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b,
                             int samples = 400);

/// Upper estimate of the hull distance in any dimension from vertex pairs and random
/// convex combinations.
double sampled_hull_distance_nd(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b,
                                std::uint64_t seed, int samples = 20000);

/// Sum over all isometries g in `elements` of ||phi(g^-1 x) - phi(g^-1 y)||^2, with the
/// inverse found by search in the element list.
urysohn::Rational direct_quadratic_sum(const std::vector<urysohn::Permutation>& elements,
                                       const std::vector<urysohn::ExactVector>& phi, int x, int y);

}  // namespace oracle
