#include "urysohn/metric_space.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace urysohn {

InvalidSpace::InvalidSpace(ValidationReport report)
    : InvalidInput("not a finite metric space:\n" + report.to_string()), report_(std::move(report)) {}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

ValidationReport validate_space(const DistanceMatrix& dist, Dist scale, const DistanceValueSet& value_set) {
  if (scale <= 0) throw InvalidInput("scale must be positive");
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      throw InvalidInput("distance matrix is not square: row " + std::to_string(i) + " has " +
                         std::to_string(dist[i].size()) + " entries, expected " + std::to_string(n));
    }
  }
  ValidationReport report;
  const int m = static_cast<int>(n);
  for (int i = 0; i < m; ++i) {
    if (dist[i][i] != 0) report.add("diagonal", {i}, "d(x,x) = " + std::to_string(dist[i][i]));
    for (int j = i + 1; j < m; ++j) {
      if (dist[i][j] != dist[j][i]) {
        report.add("symmetry", {i, j},
                   std::to_string(dist[i][j]) + " != " + std::to_string(dist[j][i]));
      }
      if (dist[i][j] <= 0) report.add("positivity", {i, j}, "d = " + std::to_string(dist[i][j]));
      if (!value_set.contains(dist[i][j])) {
        report.add("value", {i, j}, std::to_string(dist[i][j]) + " not an admissible value");
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (i == j || j == k || i == k) continue;
        if (dist[i][k] > dist[i][j] + dist[j][k]) {
          std::ostringstream msg;
          msg << "d(" << i << "," << k << ")=" << dist[i][k] << " > d(" << i << "," << j
              << ")+d(" << j << "," << k << ")=" << dist[i][j] + dist[j][k];
          report.add("triangle", {i, j, k}, msg.str());
        }
      }
    }
  }
  return report;
}

FiniteMetricSpace::FiniteMetricSpace(std::string name, std::vector<std::string> labels, Dist scale,
                                     const DistanceMatrix& dist, DistanceValueSet value_set)
    : name_(std::move(name)), labels_(std::move(labels)), scale_(scale), value_set_(std::move(value_set)) {
  ValidationReport report = validate_space(dist, scale_, value_set_);
  if (labels_.size() != dist.size()) {
    throw InvalidInput("label count " + std::to_string(labels_.size()) + " does not match " +
                       std::to_string(dist.size()) + " points");
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("duplicate point labels");
  }
  if (!report.ok()) throw InvalidSpace(std::move(report));
  n_ = static_cast<int>(dist.size());
  dist_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : dist) dist_.insert(dist_.end(), row.begin(), row.end());
}

FiniteMetricSpace::FiniteMetricSpace(const DistanceMatrix& dist, DistanceValueSet value_set, Dist scale)
    : FiniteMetricSpace("", default_labels(dist.size()), scale, dist, std::move(value_set)) {}

FiniteMetricSpace FiniteMetricSpace::unchecked(std::string name, std::vector<std::string> labels, Dist scale,
                                               std::vector<Dist> flat, DistanceValueSet value_set) {
  FiniteMetricSpace s;
  s.name_ = std::move(name);
  s.labels_ = std::move(labels);
  s.scale_ = scale;
  s.n_ = static_cast<int>(s.labels_.size());
  s.dist_ = std::move(flat);
  s.value_set_ = std::move(value_set);
  return s;
}

int FiniteMetricSpace::index_of(std::string_view label) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  throw InvalidInput("unknown point label '" + std::string(label) + "'");
}

DistanceMatrix FiniteMetricSpace::matrix() const {
  DistanceMatrix m(n_, std::vector<Dist>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[i][j] = d(i, j);
  }
  return m;
}

FiniteMetricSpace FiniteMetricSpace::subspace(std::span<const int> points) const {
  std::vector<std::string> labels;
  std::vector<Dist> flat;
  for (int i : points) labels.push_back(label(i));
  for (int i : points) {
    for (int j : points) flat.push_back(d(i, j));
  }
  return unchecked(name_, std::move(labels), scale_, std::move(flat), value_set_);
}

Dist FiniteMetricSpace::min_positive_distance() const {
  Dist best = 0;
  for (Dist v : dist_) {
    if (v > 0 && (best == 0 || v < best)) best = v;
  }
  return best;
}

Dist FiniteMetricSpace::diameter() const {
  Dist best = 0;
  for (Dist v : dist_) best = std::max(best, v);
  return best;
}

std::vector<Dist> FiniteMetricSpace::profile(int i) const {
  std::vector<Dist> row(dist_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                        dist_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
  std::sort(row.begin(), row.end());
  return row;
}

bool FiniteMetricSpace::operator==(const FiniteMetricSpace& other) const {
  return labels_ == other.labels_ && scale_ == other.scale_ && dist_ == other.dist_ &&
         value_set_ == other.value_set_;
}

FiniteMetricSpace make_path(int n) {
  DistanceMatrix m(n, std::vector<Dist>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = i > j ? i - j : j - i;
  }
  FiniteMetricSpace s(m, DistanceValueSet::integers(1));
  s.set_name("P" + std::to_string(n));
  return s;
}

FiniteMetricSpace make_uniform(int n, Dist d) {
  DistanceMatrix m(n, std::vector<Dist>(n, d));
  for (int i = 0; i < n; ++i) m[i][i] = 0;
  FiniteMetricSpace s(m, DistanceValueSet::integers(1));
  s.set_name("K" + std::to_string(n));
  return s;
}

FiniteMetricSpace make_line(std::span<const Dist> coordinates) {
  const int n = static_cast<int>(coordinates.size());
  DistanceMatrix m(n, std::vector<Dist>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = coordinates[i] > coordinates[j] ? coordinates[i] - coordinates[j] : coordinates[j] - coordinates[i];
    }
  }
  return FiniteMetricSpace(m, DistanceValueSet::integers(1));
}

}  // namespace urysohn
