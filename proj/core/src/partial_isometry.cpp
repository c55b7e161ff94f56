#include "urysohn/partial_isometry.hpp"

#include <algorithm>
#include <functional>

namespace urysohn {

PartialIsometry::PartialIsometry(int space_size, const std::vector<int>& domain, const std::vector<int>& image)
    : table_(space_size, -1) {
  if (domain.size() != image.size()) throw InvalidInput("domain and image sizes differ");
  std::vector<char> used(space_size, 0);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const int a = domain[i];
    const int b = image[i];
    if (a < 0 || a >= space_size || b < 0 || b >= space_size) throw InvalidInput("point out of range");
    if (table_[a] >= 0) throw InvalidInput("repeated domain point");
    if (used[b]) throw InvalidInput("partial map is not injective");
    used[b] = 1;
    table_[a] = b;
  }
  size_ = static_cast<int>(domain.size());
}

PartialIsometry PartialIsometry::from_table(std::vector<int> table) {
  std::vector<int> domain;
  std::vector<int> image;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= 0) {
      domain.push_back(static_cast<int>(i));
      image.push_back(table[i]);
    }
  }
  return PartialIsometry(static_cast<int>(table.size()), domain, image);
}

PartialIsometry PartialIsometry::empty(int space_size) {
  PartialIsometry p;
  p.table_.assign(space_size, -1);
  return p;
}

PartialIsometry PartialIsometry::restriction(const Permutation& g, const std::vector<int>& domain) {
  std::vector<int> image;
  for (int a : domain) image.push_back(g(a));
  return PartialIsometry(g.degree(), domain, image);
}

std::vector<int> PartialIsometry::domain() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> PartialIsometry::image() const {
  std::vector<int> out;
  for (int v : table_) {
    if (v >= 0) out.push_back(v);
  }
  return out;
}

PartialIsometry PartialIsometry::inverse() const {
  std::vector<int> table(table_.size(), -1);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= 0) table[table_[i]] = static_cast<int>(i);
  }
  return from_table(std::move(table));
}

PartialIsometry PartialIsometry::compose(const PartialIsometry& rhs) const {
  std::vector<int> table(rhs.table_.size(), -1);
  for (std::size_t i = 0; i < rhs.table_.size(); ++i) {
    const int mid = rhs.table_[i];
    if (mid >= 0 && table_[mid] >= 0) table[i] = table_[mid];
  }
  return from_table(std::move(table));
}

bool PartialIsometry::preserves_distances(const FiniteMetricSpace& space) const {
  const auto dom = domain();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      if (space.d(dom[i], dom[j]) != space.d(table_[dom[i]], table_[dom[j]])) return false;
    }
  }
  return true;
}

bool PartialIsometry::extended_by(const Permutation& g) const {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= 0 && g(static_cast<int>(i)) != table_[i]) return false;
  }
  return true;
}

std::strong_ordering PartialIsometry::operator<=>(const PartialIsometry& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  if (auto c = domain() <=> other.domain(); c != 0) return c;
  if (auto c = image() <=> other.image(); c != 0) return c;
  return table_.size() <=> other.table_.size();
}

std::vector<PartialIsometry> enumerate_partial_isometries(const FiniteMetricSpace& space, int max_domain) {
  const int n = space.size();
  max_domain = std::min(max_domain, n);
  std::vector<PartialIsometry> out;
  std::vector<int> domain;
  std::vector<int> image;
  std::vector<char> used(n, 0);

  // Images for a fixed domain, assigned point by point with distance checks.
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == domain.size()) {
      out.emplace_back(n, domain, image);
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = space.d(domain[j], domain[k]) == space.d(image[j], b);
      if (!ok) continue;
      used[b] = 1;
      image.push_back(b);
      assign(k + 1);
      image.pop_back();
      used[b] = 0;
    }
  };
  std::function<void(int, int)> choose = [&](int start, int remaining) {
    if (remaining == 0) {
      assign(0);
      return;
    }
    for (int a = start; a < n; ++a) {
      domain.push_back(a);
      choose(a + 1, remaining - 1);
      domain.pop_back();
    }
  };
  for (int size = 1; size <= max_domain; ++size) choose(0, size);
  return out;
}

}  // namespace urysohn
