#pragma once

#include <optional>
#include <vector>

#include "urysohn/free_group.hpp"

namespace urysohn {

/// Classes [u, x] of pairs with |u| <= L under (uv, x) ~ (u, v.x).
class TruncatedGlobalization {
 public:
  TruncatedGlobalization(const Alphabet& alphabet, int length);

  int length() const noexcept { return length_; }
  /// Reduced words of length <= L in canonical order.
  const std::vector<Word>& words() const noexcept { return words_; }
  int class_count() const noexcept { return class_count_; }
  std::size_t pair_count() const noexcept { return class_of_.size(); }
  /// Class of (words()[word], x).
  int class_of(int word, int x) const;
  /// Class of (u, x) for a reduced word u with |u| <= L.
  int class_of(const Word& u, int x) const;
  int word_index(const Word& u) const;
  /// g.[u, x] = [gu, x] when some representative keeps |gu| <= L.
  std::optional<int> act(Letter g, int cls) const;
  /// Representatives (word index, point) of a class.
  std::vector<std::pair<int, int>> members(int cls) const;

 private:
  const Alphabet* alphabet_;
  int length_;
  int points_;
  std::vector<Word> words_;
  std::vector<int> class_of_;
  int class_count_ = 0;
};

struct SubgroupData {
  /// Words generating the subgroup that must stabilize the base coset.
  std::vector<Word> x0;
  /// Words that must stay outside that subgroup.
  std::vector<Word> x1;
};

/// X0 = {p^-1 p' : p(a0) = p'(a0)} u {p3^-1 p1 p2 : p1(p2(a0)) = p3(a0)} and
/// X1 = {p^-1 p' : p(a0) != p'(a0)}, reduced and deduplicated.
SubgroupData emit_subgroup_data(const Alphabet& alphabet, int a0);

}  // namespace urysohn
