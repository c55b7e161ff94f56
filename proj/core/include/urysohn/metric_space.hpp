#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urysohn/report.hpp"
#include "urysohn/types.hpp"
#include "urysohn/value_set.hpp"

namespace urysohn {

using DistanceMatrix = std::vector<std::vector<Dist>>;

/// Raised by the validating constructor; carries the full report.
class InvalidSpace : public InvalidInput {
 public:
  explicit InvalidSpace(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Finite metric space with distances d(i, j) / scale.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::string name, std::vector<std::string> labels, Dist scale,
                    const DistanceMatrix& dist, DistanceValueSet value_set);
  /// Distances given without labels; labels become "0", "1", ...
  FiniteMetricSpace(const DistanceMatrix& dist, DistanceValueSet value_set = {}, Dist scale = 1);

  /// Skips validation. For hot loops that build spaces known to be metric.
  static FiniteMetricSpace unchecked(std::string name, std::vector<std::string> labels, Dist scale,
                                     std::vector<Dist> flat, DistanceValueSet value_set);

  int size() const noexcept { return n_; }
  Dist d(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
  Dist scale() const noexcept { return scale_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const DistanceValueSet& value_set() const noexcept { return value_set_; }
  const std::vector<Dist>& flat() const noexcept { return dist_; }

  /// Throws InvalidInput if absent.
  int index_of(std::string_view label) const;
  DistanceMatrix matrix() const;
  FiniteMetricSpace subspace(std::span<const int> points) const;
  Dist min_positive_distance() const;
  Dist diameter() const;
  /// Sorted distances from i to every point (its distance profile).
  std::vector<Dist> profile(int i) const;

  bool operator==(const FiniteMetricSpace& other) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  Dist scale_ = 1;
  int n_ = 0;
  std::vector<Dist> dist_;
  DistanceValueSet value_set_;
};

/// Lists every violated axiom. Throws InvalidInput only for structural problems
/// (non-square matrix, non-positive scale).
ValidationReport validate_space(const DistanceMatrix& dist, Dist scale, const DistanceValueSet& value_set);

/// Path metric on {0..n-1}: d(i, j) = |i - j|.
FiniteMetricSpace make_path(int n);
/// Every pair at distance `d`.
FiniteMetricSpace make_uniform(int n, Dist d = 1);
/// Points on the integer line with the given coordinates.
FiniteMetricSpace make_line(std::span<const Dist> coordinates);

}  // namespace urysohn
