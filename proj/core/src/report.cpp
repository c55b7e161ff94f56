#include "urysohn/report.hpp"

#include <algorithm>
#include <sstream>

namespace urysohn {

void ValidationReport::add(std::string kind, std::vector<int> witness, std::string detail) {
  violations_.push_back({std::move(kind), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations_) {
    out << v.kind << " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : "") << v.witness[i];
    out << "]";
    if (!v.detail.empty()) out << " " << v.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace urysohn
