#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liepair/scalar.hpp"

namespace liepair {

/// One failed identity instance: which identity, on which basis indices, and
/// the exact nonzero residual (coordinates in the target space).
struct Violation {
  std::string identity;
  std::vector<int> indices;
  std::vector<GaussScalar> residual;
};

/// Outcome of an exhaustive identity sweep.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string identity, std::vector<int> indices, std::vector<GaussScalar> residual) {
    violations.push_back({std::move(identity), std::move(indices), std::move(residual)});
  }
  /// Records a residual when it is nonzero; always counts the check.
  void record(const std::string& identity, std::vector<int> indices, std::vector<GaussScalar> residual);
  void merge(const CheckReport& other);
};

/// Human-readable one-line summary, e.g. "jacobi: 27 checked, 0 violations".
std::string summary(const CheckReport& r);

}  // namespace liepair
