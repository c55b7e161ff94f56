#include "urysohn/isometry.hpp"

#include <algorithm>
#include <functional>

namespace urysohn {

namespace {

class ExtensionSearch {
 public:
  explicit ExtensionSearch(const FiniteMetricSpace& space) : space_(space), n_(space.size()) {
    profiles_.reserve(n_);
    for (int i = 0; i < n_; ++i) profiles_.push_back(space.profile(i));
  }

  std::optional<Permutation> run(std::span<const std::pair<int, int>> fixed) {
    image_.assign(n_, -1);
    used_.assign(n_, 0);
    order_.clear();
    for (const auto& [a, b] : fixed) {
      if (a < 0 || a >= n_ || b < 0 || b >= n_) throw InvalidInput("point out of range");
      if (image_[a] >= 0 || used_[b]) {
        if (image_[a] == b) continue;
        return std::nullopt;
      }
      if (profiles_[a] != profiles_[b]) return std::nullopt;
      for (int x : order_) {
        if (space_.d(x, a) != space_.d(image_[x], b)) return std::nullopt;
      }
      image_[a] = b;
      used_[b] = 1;
      order_.push_back(a);
    }
    const std::size_t fixed_count = order_.size();
    for (int a = 0; a < n_; ++a) {
      if (image_[a] < 0) order_.push_back(a);
    }
    if (!extend(fixed_count)) return std::nullopt;
    return Permutation(image_);
  }

 private:
  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const int a = order_[k];
    for (int b = 0; b < n_; ++b) {
      if (used_[b] || profiles_[a] != profiles_[b]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = space_.d(order_[j], a) == space_.d(image_[order_[j]], b);
      if (!ok) continue;
      image_[a] = b;
      used_[b] = 1;
      if (extend(k + 1)) return true;
      image_[a] = -1;
      used_[b] = 0;
    }
    return false;
  }

  const FiniteMetricSpace& space_;
  int n_;
  std::vector<std::vector<Dist>> profiles_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<int> order_;
};

}  // namespace

std::optional<Permutation> find_extension(const FiniteMetricSpace& space,
                                          std::span<const std::pair<int, int>> fixed) {
  return ExtensionSearch(space).run(fixed);
}

std::optional<Permutation> find_extension(const FiniteMetricSpace& space, const PartialIsometry& p) {
  std::vector<std::pair<int, int>> fixed;
  for (int a : p.domain()) fixed.emplace_back(a, p(a));
  return find_extension(space, fixed);
}

PermutationGroup compute_isometry_group(const FiniteMetricSpace& space) {
  const int n = space.size();
  ExtensionSearch search(space);
  std::vector<Permutation> gens;
  for (int level = n - 1; level >= 0; --level) {
    std::vector<std::pair<int, int>> fixed;
    for (int i = 0; i < level; ++i) fixed.emplace_back(i, i);
    const auto profile = space.profile(level);
    for (int y = level + 1; y < n; ++y) {
      if (space.profile(y) != profile) continue;
      const auto orbit = PermutationGroup(n, gens).orbit(level);
      if (std::binary_search(orbit.begin(), orbit.end(), y)) continue;
      fixed.emplace_back(level, y);
      if (auto g = search.run(fixed)) gens.push_back(std::move(*g));
      fixed.pop_back();
    }
  }
  std::reverse(gens.begin(), gens.end());
  return PermutationGroup(n, std::move(gens));
}

std::vector<Permutation> enumerate_isometries(const FiniteMetricSpace& space, std::size_t limit) {
  return compute_isometry_group(space).elements(limit);
}

TransitivityResult check_almost_transitive(const FiniteMetricSpace& space, const PermutationGroup& group, int n,
                                           const std::optional<Rational>& epsilon) {
  if (n < 1) throw InvalidInput("subset size must be positive");
  if (group.degree() != space.size()) throw InvalidInput("group degree does not match the space");
  if (epsilon && *epsilon <= 0) throw InvalidInput("epsilon must be positive");
  TransitivityResult result;
  std::vector<Permutation> elements;
  if (epsilon) elements = group.elements();
  for (const auto& p : enumerate_partial_isometries(space, n)) {
    if (p.domain_size() != n) continue;
    bool matched = false;
    if (!epsilon) {
      std::vector<std::pair<int, int>> pairs;
      for (int a : p.domain()) pairs.emplace_back(a, p(a));
      matched = group.transporter(pairs).has_value();
    } else {
      const Rational bound = *epsilon * space.scale();
      const auto dom = p.domain();
      matched = std::any_of(elements.begin(), elements.end(), [&](const Permutation& g) {
        return std::all_of(dom.begin(), dom.end(), [&](int a) { return Rational(space.d(g(a), p(a))) < bound; });
      });
    }
    if (!matched) {
      result.holds = false;
      result.counterexample = p;
      return result;
    }
  }
  return result;
}

}  // namespace urysohn
