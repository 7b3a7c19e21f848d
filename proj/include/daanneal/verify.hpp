#pragma once

#include <string>
#include <vector>

#include "daanneal/ising.hpp"

namespace daanneal {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  bool skipped = false;
  double max_error = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const;
};

inline constexpr std::size_t kMaxVerifyVertices = 10;

/// Cross-checks every exact routine on one instance against the literal
/// evaluators in daanneal::reference (R-factors, DA rows, row sums and
/// support, DA >= Metropolis off-diagonal, the Gibbs-residual identity,
/// Metropolis detailed balance, stationary residual, field-only equality,
/// R monotonicity for zero-field ferromagnets, cavity updates, landscape depths).
VerifyReport verify_instance(const IsingInstance& instance, double beta);

}  // namespace daanneal
