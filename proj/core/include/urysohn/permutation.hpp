#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "urysohn/types.hpp"

namespace urysohn {

/// Bijection of {0..n-1}. Composition is right to left: (g * h)(x) = g(h(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Smallest moved point, or -1.
  int first_moved() const noexcept;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Permutation group given by generators, with a lazily built stabilizer chain.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  PermutationGroup(int degree, std::vector<Permutation> generators);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  BigInt order() const;
  bool contains(const Permutation& g) const;
  /// All elements, sorted. Throws Error if the group has more than `limit` elements.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const;
  /// Orbit of `point`, sorted.
  std::vector<int> orbit(int point) const;
  /// Schreier generators of the stabilizer of `point` (identity removed, deduplicated).
  std::vector<Permutation> stabilizer_generators(int point) const;
  /// Some g with g(from) = to for every pair, if one exists in the group. Chains built for
  /// each set of source points are cached, so the group is not safe to share across threads.
  std::optional<Permutation> transporter(std::span<const std::pair<int, int>> constraints) const;
  /// Base points of the stabilizer chain.
  std::vector<int> base() const;

  struct Chain;

 private:
  const Chain& chain() const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  mutable std::shared_ptr<Chain> chain_;
  mutable std::map<std::vector<int>, std::shared_ptr<Chain>> prefixed_;
};

}  // namespace urysohn
