#pragma once

#include <string>
#include <vector>

namespace lgraph {

/// Outcome of a report-style validator. Each failure names its witness.
struct Report {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string message) { failures.push_back(std::move(message)); }
  void merge(const Report& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
  std::string summary() const;
};

}  // namespace lgraph
