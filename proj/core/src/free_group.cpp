#include "urysohn/free_group.hpp"

#include <algorithm>
#include <sstream>

namespace urysohn {

Letter Letter::from_code(int code) {
  if (code == 0) throw InvalidInput("letter code 0 is not allowed");
  return code > 0 ? Letter{code - 1, false} : Letter{-code - 1, true};
}

Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word multiply(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return reduce_word(w);
}

std::vector<int> word_codes(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back(l.code());
  return out;
}

Word word_from_codes(const std::vector<int>& codes) {
  Word w;
  w.reserve(codes.size());
  for (int c : codes) w.push_back(Letter::from_code(c));
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out << (i ? "." : "") << "p" << w[i].index;
    if (w[i].inverse) out << "^-1";
  }
  return out.str();
}

bool word_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

Alphabet::Alphabet(FiniteMetricSpace space) : space_(std::move(space)) {
  letters_ = enumerate_partial_isometries(space_, space_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) index_.emplace(letters_[i].table(), static_cast<int>(i));
}

int Alphabet::index_of(const PartialIsometry& p) const {
  const auto it = index_.find(p.table());
  if (it == index_.end()) throw InvalidInput("not a partial isometry of the space");
  return it->second;
}

int Alphabet::singleton(int a, int b) const {
  return index_of(PartialIsometry(space_.size(), {a}, {b}));
}

PartialIsometry eval_partial_action(const Alphabet& alphabet, const Word& w) {
  const int n = alphabet.space().size();
  std::vector<int> table(n);
  for (int i = 0; i < n; ++i) table[i] = i;
  const Word reduced = reduce_word(w);
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    if (it->index < 0 || it->index >= alphabet.size()) throw InvalidInput("letter index out of range");
    const PartialIsometry step = it->inverse ? alphabet.letter(it->index).inverse() : alphabet.letter(it->index);
    for (int& v : table) {
      if (v >= 0) v = step(v);
    }
  }
  return PartialIsometry::from_table(std::move(table));
}

}  // namespace urysohn
