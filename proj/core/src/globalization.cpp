#include "urysohn/globalization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace urysohn {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Word> reduced_words(int letters, int length) {
  std::vector<Word> out{Word{}};
  std::size_t start = 0;
  for (int len = 1; len <= length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i) {
      for (int idx = 0; idx < letters; ++idx) {
        for (bool inv : {false, true}) {
          const Letter l{idx, inv};
          if (!out[i].empty() && out[i].back() == l.inverted()) continue;
          Word w = out[i];
          w.push_back(l);
          out.push_back(std::move(w));
        }
      }
    }
    start = end;
  }
  return out;
}

}  // namespace

TruncatedGlobalization::TruncatedGlobalization(const Alphabet& alphabet, int length)
    : alphabet_(&alphabet), length_(length), points_(alphabet.space().size()) {
  if (length < 0) throw InvalidInput("window length must be non-negative");
  words_ = reduced_words(alphabet.size(), length);
  if (words_.size() * static_cast<std::size_t>(points_) > 50'000'000) throw Error("globalization window too large");
  const std::size_t total = words_.size() * points_;
  DisjointSets sets(total);
  // Splits w = u v without cancellation generate the whole relation inside the window.
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    const Word& w = words_[wi];
    for (std::size_t cut = 0; cut < w.size(); ++cut) {
      const Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
      const Word v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
      const PartialIsometry pv = eval_partial_action(alphabet, v);
      const int ui = word_index(u);
      for (int x = 0; x < points_; ++x) {
        if (pv.defined_at(x)) sets.unite(wi * points_ + x, static_cast<std::size_t>(ui) * points_ + pv(x));
      }
    }
  }
  class_of_.assign(total, -1);
  std::map<std::size_t, int> ids;
  for (std::size_t i = 0; i < total; ++i) {
    const auto [it, inserted] = ids.try_emplace(sets.find(i), static_cast<int>(ids.size()));
    class_of_[i] = it->second;
  }
  class_count_ = static_cast<int>(ids.size());
}

int TruncatedGlobalization::word_index(const Word& u) const {
  const auto it = std::lower_bound(words_.begin(), words_.end(), u, word_less);
  if (it == words_.end() || *it != u) throw InvalidInput("word " + word_to_string(u) + " is outside the window");
  return static_cast<int>(it - words_.begin());
}

int TruncatedGlobalization::class_of(int word, int x) const {
  return class_of_.at(static_cast<std::size_t>(word) * points_ + x);
}

int TruncatedGlobalization::class_of(const Word& u, int x) const { return class_of(word_index(reduce_word(u)), x); }

std::vector<std::pair<int, int>> TruncatedGlobalization::members(int cls) const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    if (class_of_[i] == cls) out.emplace_back(static_cast<int>(i / points_), static_cast<int>(i % points_));
  }
  return out;
}

std::optional<int> TruncatedGlobalization::act(Letter g, int cls) const {
  for (const auto& [wi, x] : members(cls)) {
    const Word gu = multiply(Word{g}, words_[wi]);
    if (static_cast<int>(gu.size()) <= length_) return class_of(word_index(gu), x);
  }
  return std::nullopt;
}

SubgroupData emit_subgroup_data(const Alphabet& alphabet, int a0) {
  const int n = alphabet.space().size();
  if (a0 < 0 || a0 >= n) throw InvalidInput("base point out of range");
  std::set<Word, decltype(&word_less)> x0(&word_less);
  std::set<Word, decltype(&word_less)> x1(&word_less);
  std::vector<int> at_a0;
  for (int i = 0; i < alphabet.size(); ++i) {
    if (alphabet.letter(i).defined_at(a0)) at_a0.push_back(i);
  }
  for (int p : at_a0) {
    for (int q : at_a0) {
      const Word w = multiply(Word{Letter{p, true}}, Word{Letter{q, false}});
      if (alphabet.letter(p)(a0) == alphabet.letter(q)(a0)) x0.insert(w);
      else x1.insert(w);
    }
  }
  for (int p2 : at_a0) {
    const int mid = alphabet.letter(p2)(a0);
    for (int p1 = 0; p1 < alphabet.size(); ++p1) {
      if (!alphabet.letter(p1).defined_at(mid)) continue;
      const int target = alphabet.letter(p1)(mid);
      for (int p3 : at_a0) {
        if (alphabet.letter(p3)(a0) != target) continue;
        x0.insert(reduce_word(Word{Letter{p3, true}, Letter{p1, false}, Letter{p2, false}}));
      }
    }
  }
  return {{x0.begin(), x0.end()}, {x1.begin(), x1.end()}};
}

}  // namespace urysohn
