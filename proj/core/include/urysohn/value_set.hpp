#pragma once

#include <optional>
#include <vector>

#include "urysohn/types.hpp"

namespace urysohn {

enum class ValueSetKind { finite, integers, scaled };

/// Admissible distance values, expressed in the scaled units of a space.
///
/// `finite` is an explicit list, `integers` is every multiple of the space scale and
/// `scaled` is every scaled integer. The optional bound caps the last two kinds.
class DistanceValueSet {
 public:
  DistanceValueSet() = default;

  static DistanceValueSet finite(std::vector<Dist> values);
  static DistanceValueSet integers(Dist scale, std::optional<Dist> bound = std::nullopt);
  static DistanceValueSet scaled(std::optional<Dist> bound = std::nullopt);

  ValueSetKind kind() const noexcept { return kind_; }
  std::optional<Dist> bound() const noexcept { return bound_; }
  /// Explicit values including 0 (finite kind only).
  const std::vector<Dist>& values() const noexcept { return values_; }
  /// Grid spacing: gcd of positive values, the scale, or 1.
  Dist step() const noexcept { return step_; }

  bool contains(Dist v) const;
  /// Every grid point between two members is a member.
  bool is_convex() const;
  /// Positive members in [lo, hi], ascending.
  std::vector<Dist> members_between(Dist lo, Dist hi) const;
  std::optional<Dist> max_value() const;

  bool operator==(const DistanceValueSet&) const = default;

 private:
  ValueSetKind kind_ = ValueSetKind::scaled;
  std::vector<Dist> values_;
  std::optional<Dist> bound_;
  Dist step_ = 1;
};

}  // namespace urysohn
