#pragma once

#include <map>
#include <string>
#include <vector>

#include "urysohn/exact_lp.hpp"
#include "urysohn/report.hpp"

namespace urysohn {

/// Binary tree of vectors addressed by bitstrings; "" is the root and sigma0, sigma1 are
/// the children of sigma. Leaves have addresses of length `depth`.
struct NEpsTree {
  int depth = 0;
  std::map<std::string, ExactVector> nodes;
  Rational eps;
  Rational radius;
};

/// Checks shape, the midpoint law node(s) = (node(s0) + node(s1)) / 2, the sibling
/// separation ||node(s0) - node(s1)||_2 >= eps and ||node(s)||_2 <= radius, all exactly.
/// Violation witnesses hold the address bits.
ValidationReport validate_tree(const NEpsTree& tree);

/// Builds a tree from sets K_1..K_{2^(n+1)-1} (index 0 unused). Leaves take the first point
/// of their set and parents the midpoint of their children. Throws InvalidInput naming the
/// failing index when K_{2i} and K_{2i+1} are not contained in conv K_i or their hulls are
/// closer than eps.
NEpsTree tree_from_nested_sets(const std::vector<std::vector<ExactVector>>& sets, const Rational& eps,
                               const Rational& radius);

/// Address of heap index i >= 1: the binary digits of i after the leading 1.
std::string heap_address(std::size_t index);

}  // namespace urysohn
