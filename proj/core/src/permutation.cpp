#include "urysohn/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace urysohn {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
      throw InvalidInput("image list is not a permutation");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images_.resize(degree);
  for (int i = 0; i < degree; ++i) p.images_[i] = i;
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(rhs.images_.size());
  for (std::size_t i = 0; i < rhs.images_.size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<int>(i);
  return out;
}

bool Permutation::is_identity() const noexcept { return first_moved() < 0; }

int Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return static_cast<int>(i);
  }
  return -1;
}

struct PermutationGroup::Chain {
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::size_t> processed;
  };

  int degree = 0;
  std::vector<Level> levels;

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const {
    for (std::size_t l = start; l < levels.size(); ++l) {
      const int image = g(levels[l].base);
      const auto& t = levels[l].transversal[image];
      if (!t) return {std::move(g), l};
      g = t->inverse() * g;
    }
    return {std::move(g), levels.size()};
  }

  void new_level(int base) {
    Level level;
    level.base = base;
    level.orbit = {base};
    level.transversal.assign(degree, std::nullopt);
    level.transversal[base] = Permutation::identity(degree);
    level.processed = {0};
    levels.push_back(std::move(level));
  }

  void add(std::size_t j, const Permutation& h) {
    if (j == levels.size()) new_level(h.first_moved());
    for (std::size_t l = 0; l <= j; ++l) levels[l].gens.push_back(h);
    for (std::size_t l = j + 1; l-- > 0;) close(l);
  }

  // Extend the orbit of level l and sift every unchecked Schreier generator.
  void close(std::size_t l) {
    for (std::size_t idx = 0; idx < levels[l].orbit.size(); ++idx) {
      while (levels[l].processed[idx] < levels[l].gens.size()) {
        const std::size_t gi = levels[l].processed[idx]++;
        const Permutation s = levels[l].gens[gi];
        const int point = levels[l].orbit[idx];
        const int image = s(point);
        Permutation tp = *levels[l].transversal[point];
        if (!levels[l].transversal[image]) {
          levels[l].transversal[image] = s * tp;
          levels[l].orbit.push_back(image);
          levels[l].processed.push_back(0);
          continue;
        }
        Permutation schreier = levels[l].transversal[image]->inverse() * s * tp;
        auto [residue, at] = sift(std::move(schreier), l + 1);
        if (!residue.is_identity()) add(at, residue);
      }
    }
  }

  static std::shared_ptr<Chain> build(int degree, const std::vector<Permutation>& gens,
                                      std::span<const int> base_prefix) {
    auto chain = std::make_shared<Chain>();
    chain->degree = degree;
    for (int b : base_prefix) chain->new_level(b);
    for (const auto& g : gens) {
      if (g.is_identity()) continue;
      auto [residue, at] = chain->sift(g, 0);
      if (residue.is_identity()) continue;
      chain->add(at, residue);
    }
    return chain;
  }
};

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw InvalidInput("generator degree mismatch");
  }
}

const PermutationGroup::Chain& PermutationGroup::chain() const {
  if (!chain_) chain_ = Chain::build(degree_, generators_, {});
  return *chain_;
}

BigInt PermutationGroup::order() const {
  BigInt result = 1;
  for (const auto& level : chain().levels) result *= static_cast<unsigned>(level.orbit.size());
  return result;
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return chain().sift(g, 0).first.is_identity();
}

std::vector<Permutation> PermutationGroup::elements(std::size_t limit) const {
  if (order() > limit) throw Error("group has more than " + std::to_string(limit) + " elements");
  std::set<Permutation> seen{Permutation::identity(degree_)};
  std::deque<Permutation> queue{Permutation::identity(degree_)};
  while (!queue.empty()) {
    Permutation g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators_) {
      Permutation h = s * g;
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> PermutationGroup::orbit(int point) const {
  std::vector<char> seen(degree_, 0);
  std::vector<int> out{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : generators_) {
      const int y = s(out[i]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> PermutationGroup::stabilizer_generators(int point) const {
  std::vector<std::optional<Permutation>> transversal(degree_);
  transversal[point] = Permutation::identity(degree_);
  std::vector<int> orbit{point};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& s : generators_) {
      const int y = s(orbit[i]);
      if (!transversal[y]) {
        transversal[y] = s * *transversal[orbit[i]];
        orbit.push_back(y);
      }
    }
  }
  std::set<Permutation> out;
  for (int b : orbit) {
    for (const auto& s : generators_) {
      Permutation g = transversal[s(b)]->inverse() * s * *transversal[b];
      if (!g.is_identity()) out.insert(std::move(g));
    }
  }
  return {out.begin(), out.end()};
}

std::optional<Permutation> PermutationGroup::transporter(std::span<const std::pair<int, int>> constraints) const {
  std::vector<int> prefix;
  for (const auto& [from, to] : constraints) {
    if (from < 0 || from >= degree_ || to < 0 || to >= degree_) throw InvalidInput("point out of range");
    prefix.push_back(from);
  }
  auto& chain = prefixed_[prefix];
  if (!chain) chain = Chain::build(degree_, generators_, prefix);
  // g = t_0 t_1 ... with t_l from level l; each target is pulled back through the chosen factors.
  Permutation result = Permutation::identity(degree_);
  for (std::size_t l = 0; l < constraints.size(); ++l) {
    const int target = result.inverse()(constraints[l].second);
    const auto& t = chain->levels[l].transversal[target];
    if (!t) return std::nullopt;
    result = result * *t;
  }
  for (const auto& [from, to] : constraints) {
    if (result(from) != to) throw ConsistencyError("transporter failed self-check");
  }
  return result;
}

std::vector<int> PermutationGroup::base() const {
  std::vector<int> out;
  for (const auto& level : chain().levels) out.push_back(level.base);
  return out;
}

}  // namespace urysohn
