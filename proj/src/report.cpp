#include "liepair/report.hpp"

namespace liepair {

void CheckReport::record(const std::string& identity, std::vector<int> indices, std::vector<GaussScalar> residual) {
  ++checked;
  for (const auto& x : residual) {
    if (!x.is_zero()) {
      add(identity, std::move(indices), std::move(residual));
      return;
    }
  }
}

void CheckReport::merge(const CheckReport& other) {
  checked += other.checked;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string summary(const CheckReport& r) {
  return r.name + ": " + std::to_string(r.checked) + " checked, " + std::to_string(r.violations.size()) +
         " violations";
}

}  // namespace liepair
