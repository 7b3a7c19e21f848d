#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "daanneal/exact.hpp"
#include "daanneal/harness.hpp"
#include "daanneal/landscape.hpp"
#include "daanneal/schedules.hpp"

namespace daanneal {

// JSON report builders shared by the CLI and the Python module. Key order is
// alphabetical (nlohmann::json objects), so equal inputs give equal bytes.

nlohmann::json to_json(const RunConfig& config, const RunTrace& trace);
nlohmann::json to_json(const LandscapeReport& report);
nlohmann::json to_json(const RMonotonicityReport& report);

/// Stationary report: pi (DA or Metropolis), Gibbs, their L1 distance and
/// the Gibbs-residual identity check.
nlohmann::json stationary_report(const IsingInstance& instance, double beta, KernelKind kind);

nlohmann::json classify_report(const CoolingSchedule& schedule, double gamma_star,
                               const std::vector<std::uint64_t>& horizons);

/// Trace points as CSV: step,beta,success,success_stderr,mean_energy,best_mean,best_min,best_max.
std::string trace_csv(const RunTrace& trace);

/// Landscape per-state CSV: state,spins,energy,is_local_min,depth.
std::string landscape_csv(const IsingInstance& instance, const LandscapeReport& report);

/// Nonzero matrix entries as CSV: row,col,value.
std::string matrix_csv(const ExactChain& chain);
nlohmann::json matrix_json(const ExactChain& chain);

}  // namespace daanneal
