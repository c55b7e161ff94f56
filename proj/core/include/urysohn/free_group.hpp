#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "urysohn/metric_space.hpp"
#include "urysohn/partial_isometry.hpp"

namespace urysohn {

struct Letter {
  int index = 0;
  bool inverse = false;

  Letter inverted() const { return {index, !inverse}; }
  /// +(index+1) for the letter, -(index+1) for its inverse.
  int code() const { return inverse ? -(index + 1) : index + 1; }
  static Letter from_code(int code);

  auto operator<=>(const Letter&) const = default;
};

/// A word is read as a composite acting right to left: w = l1 l2 ... lk applies lk first.
using Word = std::vector<Letter>;

Word reduce_word(const Word& w);
Word inverse_word(const Word& w);
/// Reduced product u * v.
Word multiply(const Word& u, const Word& v);
std::vector<int> word_codes(const Word& w);
Word word_from_codes(const std::vector<int>& codes);
std::string word_to_string(const Word& w);
/// Orders by length, then lexicographically by letter.
bool word_less(const Word& u, const Word& v);

/// Every partial isometry of a space, canonically ordered; the generators of the free group.
class Alphabet {
 public:
  explicit Alphabet(FiniteMetricSpace space);

  const FiniteMetricSpace& space() const noexcept { return space_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  const PartialIsometry& letter(int i) const { return letters_.at(i); }
  const std::vector<PartialIsometry>& letters() const noexcept { return letters_; }
  /// Throws InvalidInput when `p` is not a letter.
  int index_of(const PartialIsometry& p) const;
  /// The letter a -> b with one-point domain.
  int singleton(int a, int b) const;

 private:
  FiniteMetricSpace space_;
  std::vector<PartialIsometry> letters_;
  std::map<std::vector<int>, int> index_;
};

/// Composite partial map of the reduced word, with maximal domain. The result is empty
/// when no point survives.
PartialIsometry eval_partial_action(const Alphabet& alphabet, const Word& w);

}  // namespace urysohn
