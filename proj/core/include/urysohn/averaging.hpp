#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "urysohn/exact_lp.hpp"
#include "urysohn/metric_space.hpp"
#include "urysohn/permutation.hpp"
#include "urysohn/report.hpp"

namespace urysohn {

/// psi(x)[g] = |F|^(-1/2) phi(g^-1 x) for g in F. Blocks are stored without the scalar
/// factor so that everything stays rational; the l^2 sum of the blocks' l^p norms is the
/// norm of psi.
struct AveragedEmbedding {
  FiniteMetricSpace space;
  /// Elements of F in sorted order; block g of psi(x) is at the index of g here.
  std::vector<Permutation> elements;
  double p = 2.0;
  int dim = 0;
  std::vector<ExactVector> phi;
  /// blocks[x][g] = phi(g^-1 x).
  std::vector<std::vector<ExactVector>> blocks;
  /// Designated base point x*; metadata only.
  int base_point = 0;

  int element_index(const Permutation& g) const;
  /// ||psi(x) - psi(y)||^2, exact; requires p = 2.
  Rational squared_distance(int x, int y) const;
  double distance(int x, int y) const;
  /// Flattened psi(x) including the |F|^(-1/2) factor.
  std::vector<double> psi(int x) const;
  /// Left translation (h psi(x))[g] = psi(x)[h^-1 g], on the unscaled blocks.
  std::vector<ExactVector> translate(const Permutation& h, int x) const;
};

/// Every element of F must be an isometry of the space; throws InvalidInput otherwise.
AveragedEmbedding average_map(const FiniteMetricSpace& space, const PermutationGroup& group,
                              const std::vector<ExactVector>& phi, double p = 2.0, int base_point = 0);

/// Exact checks of equivariance, of the quadratic-mean identity
/// |F| ||psi(x) - psi(y)||^2 = sum_g ||phi(g^-1 x) - phi(g^-1 y)||^2 and of the envelope
/// staircases of psi lying within those of phi (on squared distances). Requires p = 2.
ValidationReport check_averaging(const AveragedEmbedding& embedding);

/// Two pairs at the same source distance with different image distances.
using TransformViolation = std::pair<std::pair<int, int>, std::pair<int, int>>;

struct MetricTransform {
  bool exists = false;
  std::map<Dist, double> table;
  std::optional<TransformViolation> violation;
};

struct ExactMetricTransform {
  bool exists = false;
  /// r -> rho(r)^2.
  std::map<Dist, Rational> squared_table;
  std::optional<TransformViolation> violation;
};

/// Whether image distances (l^p) depend only on the source distance, up to `tol`.
MetricTransform check_metric_transform(const FiniteMetricSpace& space, const std::vector<std::vector<double>>& images,
                                       double p, double tol = 1e-9);
/// Exact version for rational l^2 images.
ExactMetricTransform check_metric_transform(const FiniteMetricSpace& space, const std::vector<ExactVector>& images);
ExactMetricTransform check_metric_transform(const AveragedEmbedding& embedding);

}  // namespace urysohn
