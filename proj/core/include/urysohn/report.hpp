#pragma once

#include <string>
#include <vector>

namespace urysohn {

struct Violation {
  std::string kind;
  std::vector<int> witness;
  std::string detail;
};

/// Collects every violation found by a checker instead of stopping at the first.
class ValidationReport {
 public:
  bool ok() const noexcept { return violations_.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  void add(std::string kind, std::vector<int> witness, std::string detail = {});
  void merge(const ValidationReport& other);

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  std::size_t size() const noexcept { return violations_.size(); }
  bool has(const std::string& kind) const;

  /// One violation per line.
  std::string to_string() const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace urysohn
