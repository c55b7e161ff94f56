#pragma once

#include <memory>
#include <vector>

#include "urysohn/free_group.hpp"
#include "urysohn/globalization.hpp"
#include "urysohn/permutation.hpp"

namespace urysohn {

/// Action of the free group on a finite set omega, one permutation per letter. The
/// subgroup H is the stabilizer of `base`, and phi(a) = h(a0 -> a).base.
class QuotientAction {
 public:
  QuotientAction(std::shared_ptr<const Alphabet> alphabet, int a0, int omega, std::vector<Permutation> generators,
                 int base = 0);

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  std::shared_ptr<const Alphabet> alphabet_ptr() const noexcept { return alphabet_; }
  const FiniteMetricSpace& space() const noexcept { return alphabet_->space(); }
  int a0() const noexcept { return a0_; }
  int omega() const noexcept { return omega_; }
  int base() const noexcept { return base_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Permutation& generator(int letter) const { return generators_.at(letter); }

  /// Image of `point` under the word (rightmost letter first).
  int act(const Word& w, int point) const;
  Permutation evaluate(const Word& w) const;
  /// Orbit of the base point, sorted.
  std::vector<int> orbit() const;
  /// phi(a) for every point of X.
  std::vector<int> phi() const;
  /// Group generated by the distinct letter permutations.
  PermutationGroup group() const;
  /// Distinct non-identity generator permutations with the first letter realizing each.
  std::vector<std::pair<int, Permutation>> distinct_generators() const;

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  int a0_;
  int omega_;
  int base_;
  std::vector<Permutation> generators_;
};

/// Checks X0 stabilization (phi well defined and p~(phi a) = phi(p a) for every letter),
/// X1 avoidance (phi injective) through equivalent point conditions.
ValidationReport check_quotient(const QuotientAction& action);

/// Evaluates the literal X0 and X1 word lists on the base point.
ValidationReport check_quotient_words(const QuotientAction& action, const SubgroupData& data);

}  // namespace urysohn
