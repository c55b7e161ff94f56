#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "urysohn/sphere_witness.hpp"
#include "urysohn/trees.hpp"

namespace urysohn {

using Embedding = std::map<std::string, ExactVector>;

struct TreeCertificate {
  int depth = 0;
  int m = 0;
  int k = 0;
  /// Minimal l^2 distance between sibling prefix hulls C_s0 and C_s1.
  double gamma_hat = 0.0;
  /// Largest distance of a witness image from the center.
  double radius = 0.0;
  /// eps of the emitted tree, a rational lower bound of gamma_hat; 0 without a tree.
  double eps_claimed = 0.0;
  double delta = 0.0;
  /// Largest depth of a (n, gamma_hat)-tree in a radius ball of l^2; -1 when unbounded.
  long long depth_bound = -1;
  bool degenerate = false;
  /// Minimal sibling separation per level, root first.
  std::vector<double> level_separation;
  std::optional<NEpsTree> tree;
  std::string fragment_id;
  std::string embedding_id;
  /// Bitstrings of the witness points, lexicographic.
  std::vector<std::string> t_eps;
  /// Support functional of the embedded a_0 - b_0, when both are embedded and distinct.
  std::vector<double> support;
  std::string note;
};

/// Groups the images of the witness points x_eps by prefix, measures sibling hull
/// separation and radius around the image of z0 (or the origin when z0 is not embedded)
/// and, when the separation is positive, builds the prefix tree through
/// tree_from_nested_sets. Throws InvalidInput when a witness point has no image.
TreeCertificate convexity_probe(const SphereWitness& witness, const TEpsilonRealization& realization,
                                const Embedding& embedding, const std::string& embedding_id = "", int workers = 0);

/// n <= 1 + log(radius / (gamma / 2)) / -log(1 - delta(gamma / radius)) for l^2; 0 when
/// gamma > 2 radius and -1 when delta vanishes.
long long tree_depth_bound(double gamma, double radius);

/// Each point maps to its vector of distances (divided by the scale) to the first
/// `fragment_size` points.
Embedding kuratowski_coordinates(const FiniteMetricSpace& space, int fragment_size);

/// depth=<n> gamma_hat=<g> radius=<M> bound=<b> degenerate=<0|1> tree=<0|1>
std::string probe_summary(const TreeCertificate& certificate);

}  // namespace urysohn
