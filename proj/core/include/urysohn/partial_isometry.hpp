#pragma once

#include <compare>
#include <vector>

#include "urysohn/metric_space.hpp"
#include "urysohn/permutation.hpp"

namespace urysohn {

/// Injective partial map on the points of a space, stored as an image table with -1
/// for undefined points. An empty domain is allowed and marks "no map".
class PartialIsometry {
 public:
  PartialIsometry() = default;
  PartialIsometry(int space_size, const std::vector<int>& domain, const std::vector<int>& image);
  static PartialIsometry from_table(std::vector<int> table);
  static PartialIsometry empty(int space_size);
  static PartialIsometry restriction(const Permutation& g, const std::vector<int>& domain);

  int space_size() const noexcept { return static_cast<int>(table_.size()); }
  const std::vector<int>& table() const noexcept { return table_; }
  std::vector<int> domain() const;
  /// Images in domain order.
  std::vector<int> image() const;
  int domain_size() const noexcept { return size_; }
  bool is_empty() const noexcept { return size_ == 0; }
  bool defined_at(int x) const { return table_[x] >= 0; }
  int operator()(int x) const { return table_[x]; }

  PartialIsometry inverse() const;
  /// (this after rhs) on the points where it is defined.
  PartialIsometry compose(const PartialIsometry& rhs) const;
  bool preserves_distances(const FiniteMetricSpace& space) const;
  bool extended_by(const Permutation& g) const;

  /// Canonical order: domain size, then domain lexicographic, then image lexicographic.
  std::strong_ordering operator<=>(const PartialIsometry& other) const;
  bool operator==(const PartialIsometry& other) const { return table_ == other.table_; }

 private:
  std::vector<int> table_;
  int size_ = 0;
};

/// Every non-empty partial isometry with domain size at most `max_domain`, in canonical order.
std::vector<PartialIsometry> enumerate_partial_isometries(const FiniteMetricSpace& space, int max_domain);

}  // namespace urysohn
