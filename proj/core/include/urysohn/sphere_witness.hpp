#pragma once

#include <string>
#include <utility>
#include <vector>

#include "urysohn/katetov.hpp"

namespace urysohn {

/// Points z0, a_0..a_N, b_0..b_N with d(a_i,a_j) = d(b_i,b_j) = 1, d(a_i,b_i) = m,
/// d(a_i,b_j) = m-1 and d(z0, .) = m, together with the functions
/// f_eps(z0) = m, f_eps(a_i) = k + eps_i, f_eps(b_i) = m - k - eps_i.
///
/// eps ranges over {0,1}^N and indexes eps_1..eps_N; eps_0 is always 0.
struct SphereWitness {
  int m = 0;
  int k = 0;
  int n = 0;
  FiniteMetricSpace fragment;
  int z0 = 0;
  std::vector<int> a;
  std::vector<int> b;
  /// Bitstrings eps_1..eps_N in lexicographic order, parallel to `family`.
  std::vector<std::string> epsilons;
  std::vector<KatetovFunction> family;
  /// Set when k < 2.
  bool small_k = false;

  const KatetovFunction& function(const std::string& bits) const;
};

/// Requires 1 <= k <= m-2 and 1 <= N <= 16. Every f_eps is validated; a failure raises
/// ConsistencyError.
SphereWitness build_sphere_witness(int m, int k, int n, int workers = 0);

/// Checks the fixed distance table and every f_eps.
ValidationReport validate_sphere_witness(const SphereWitness& witness);

struct TEpsilonRealization {
  FiniteMetricSpace space;
  /// (bitstring, point index) in lexicographic order.
  std::vector<std::pair<std::string, int>> points;
};

/// Adds a point x_eps on every sphere required by f_eps. Distances between added points
/// come from the controlled extension of f_eps over the fragment.
TEpsilonRealization realize_t_epsilon(const SphereWitness& witness);

}  // namespace urysohn
