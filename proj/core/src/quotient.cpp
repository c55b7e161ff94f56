#include "urysohn/quotient.hpp"

#include <algorithm>
#include <set>

namespace urysohn {

QuotientAction::QuotientAction(std::shared_ptr<const Alphabet> alphabet, int a0, int omega,
                               std::vector<Permutation> generators, int base)
    : alphabet_(std::move(alphabet)), a0_(a0), omega_(omega), base_(base), generators_(std::move(generators)) {
  if (!alphabet_) throw InvalidInput("missing alphabet");
  if (a0_ < 0 || a0_ >= alphabet_->space().size()) throw InvalidInput("base point out of range");
  if (omega_ < 1) throw InvalidInput("omega must be non-empty");
  if (base_ < 0 || base_ >= omega_) throw InvalidInput("base coset out of range");
  if (static_cast<int>(generators_.size()) != alphabet_->size()) {
    throw InvalidInput("expected one permutation per letter (" + std::to_string(alphabet_->size()) + "), got " +
                       std::to_string(generators_.size()));
  }
  for (const auto& g : generators_) {
    if (g.degree() != omega_) throw InvalidInput("generator is not a permutation of omega");
  }
}

int QuotientAction::act(const Word& w, int point) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Permutation& g = generators_.at(it->index);
    if (it->inverse) {
      const auto& img = g.images();
      point = static_cast<int>(std::find(img.begin(), img.end(), point) - img.begin());
    } else {
      point = g(point);
    }
  }
  return point;
}

Permutation QuotientAction::evaluate(const Word& w) const {
  Permutation out = Permutation::identity(omega_);
  for (const Letter& l : w) out = out * (l.inverse ? generators_.at(l.index).inverse() : generators_.at(l.index));
  return out;
}

std::vector<int> QuotientAction::orbit() const { return group().orbit(base_); }

std::vector<int> QuotientAction::phi() const {
  const int n = space().size();
  std::vector<int> out(n);
  for (int a = 0; a < n; ++a) out[a] = generators_[alphabet_->singleton(a0_, a)](base_);
  return out;
}

std::vector<std::pair<int, Permutation>> QuotientAction::distinct_generators() const {
  std::vector<std::pair<int, Permutation>> out;
  std::set<Permutation> seen;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].is_identity()) continue;
    if (seen.insert(generators_[i]).second) out.emplace_back(static_cast<int>(i), generators_[i]);
  }
  return out;
}

PermutationGroup QuotientAction::group() const {
  std::vector<Permutation> gens;
  for (auto& [letter, g] : distinct_generators()) gens.push_back(g);
  return PermutationGroup(omega_, std::move(gens));
}

ValidationReport check_quotient(const QuotientAction& action) {
  ValidationReport report;
  const Alphabet& alphabet = action.alphabet();
  const int a0 = action.a0();
  const auto phi = action.phi();
  const int n = action.space().size();
  for (int p = 0; p < alphabet.size(); ++p) {
    const PartialIsometry& letter = alphabet.letter(p);
    if (letter.defined_at(a0)) {
      const int via_p = action.generator(p)(action.base());
      const int expected = phi[letter(a0)];
      if (via_p != expected) {
        const int s = alphabet.singleton(a0, letter(a0));
        report.add("x0-stabilization", {p, s},
                   "word " + word_to_string({Letter{p, true}, Letter{s, false}}) + " moves the base coset");
      }
    }
    for (int a : letter.domain()) {
      if (action.generator(p)(phi[a]) != phi[letter(a)]) {
        report.add("letter-compatibility", {p, a},
                   "letter p" + std::to_string(p) + " sends phi(" + std::to_string(a) + ") to " +
                       std::to_string(action.generator(p)(phi[a])) + ", expected " + std::to_string(phi[letter(a)]));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (phi[a] == phi[b]) {
        const int sa = alphabet.singleton(a0, a);
        const int sb = alphabet.singleton(a0, b);
        report.add("x1-avoidance", {a, b},
                   "word " + word_to_string({Letter{sa, true}, Letter{sb, false}}) + " stabilizes the base coset");
      }
    }
  }
  return report;
}

ValidationReport check_quotient_words(const QuotientAction& action, const SubgroupData& data) {
  ValidationReport report;
  for (std::size_t i = 0; i < data.x0.size(); ++i) {
    if (action.act(data.x0[i], action.base()) != action.base()) {
      report.add("x0-stabilization", word_codes(data.x0[i]), word_to_string(data.x0[i]));
    }
  }
  for (std::size_t i = 0; i < data.x1.size(); ++i) {
    if (action.act(data.x1[i], action.base()) == action.base()) {
      report.add("x1-avoidance", word_codes(data.x1[i]), word_to_string(data.x1[i]));
    }
  }
  return report;
}

}  // namespace urysohn
