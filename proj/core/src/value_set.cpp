#include "urysohn/value_set.hpp"

#include <algorithm>
#include <numeric>

namespace urysohn {

DistanceValueSet DistanceValueSet::finite(std::vector<Dist> values) {
  for (Dist v : values) {
    if (v < 0) throw InvalidInput("distance values must be non-negative");
  }
  values.push_back(0);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  DistanceValueSet s;
  s.kind_ = ValueSetKind::finite;
  s.values_ = std::move(values);
  s.bound_ = s.values_.back();
  Dist g = 0;
  for (Dist v : s.values_) g = std::gcd(g, v);
  s.step_ = g == 0 ? 1 : g;
  return s;
}

DistanceValueSet DistanceValueSet::integers(Dist scale, std::optional<Dist> bound) {
  if (scale <= 0) throw InvalidInput("scale must be positive");
  if (bound && *bound < 0) throw InvalidInput("bound must be non-negative");
  DistanceValueSet s;
  s.kind_ = ValueSetKind::integers;
  s.bound_ = bound;
  s.step_ = scale;
  return s;
}

DistanceValueSet DistanceValueSet::scaled(std::optional<Dist> bound) {
  if (bound && *bound < 0) throw InvalidInput("bound must be non-negative");
  DistanceValueSet s;
  s.kind_ = ValueSetKind::scaled;
  s.bound_ = bound;
  s.step_ = 1;
  return s;
}

bool DistanceValueSet::contains(Dist v) const {
  if (v < 0) return false;
  if (kind_ == ValueSetKind::finite) return std::binary_search(values_.begin(), values_.end(), v);
  if (bound_ && v > *bound_) return false;
  return v % step_ == 0;
}

bool DistanceValueSet::is_convex() const {
  if (kind_ != ValueSetKind::finite) return true;
  // 0 is always a member, so convexity means every grid point up to the maximum is present.
  const Dist top = values_.back();
  return static_cast<Dist>(values_.size()) == top / step_ + 1;
}

std::vector<Dist> DistanceValueSet::members_between(Dist lo, Dist hi) const {
  std::vector<Dist> out;
  lo = std::max<Dist>(lo, 1);
  if (kind_ == ValueSetKind::finite) {
    for (Dist v : values_) {
      if (v >= lo && v <= hi) out.push_back(v);
    }
    return out;
  }
  if (bound_) hi = std::min(hi, *bound_);
  for (Dist v = ((lo + step_ - 1) / step_) * step_; v <= hi; v += step_) out.push_back(v);
  return out;
}

std::optional<Dist> DistanceValueSet::max_value() const {
  if (kind_ == ValueSetKind::finite) return values_.back();
  if (bound_) return (*bound_ / step_) * step_;
  return std::nullopt;
}

}  // namespace urysohn
