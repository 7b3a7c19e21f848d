#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace daanneal {

namespace schedule {

struct Constant {
  double beta = 1.0;
};

/// beta_k = log(k + k0) / gamma.
struct Logarithmic {
  double gamma = 1.0;
  double k0 = 1.0;
};

/// beta_k = beta0 * ratio^(k-1).
struct Geometric {
  double beta0 = 0.1;
  double ratio = 1.01;
};

/// beta_k = beta0 + slope * (k-1).
struct Linear {
  double beta0 = 0.1;
  double slope = 0.01;
};

/// beta_k = values[k-1]; finite.
struct Table {
  std::vector<double> values;
};

}  // namespace schedule

/// Inverse-temperature sequence beta_1, beta_2, ... Immutable after construction;
/// the constructor rejects parameters outside each family's domain.
class CoolingSchedule {
 public:
  using Family = std::variant<schedule::Constant, schedule::Logarithmic, schedule::Geometric,
                              schedule::Linear, schedule::Table>;

  explicit CoolingSchedule(Family family);

  const Family& family() const { return family_; }

  /// Canonical textual form, parseable by parse_schedule (tables print inline).
  std::string describe() const;

 private:
  Family family_;
};

/// beta_k for k >= 1. Throws std::out_of_range for k == 0 or past a table's end.
double beta_at(const CoolingSchedule& schedule, std::uint64_t k);

/// Checks beta_k > 0 and nondecreasing on the first `prefix` steps.
bool is_valid_prefix(const CoolingSchedule& schedule, std::uint64_t prefix);

enum class Divergence { Diverges, Converges, Unknown };

std::string_view to_string(Divergence d);

/// Decides whether sum_k exp(-beta_k * gamma_star) diverges, analytically per family.
/// Tables are always Unknown: partial sums cannot certify divergence.
Divergence classify_condition(const CoolingSchedule& schedule, double gamma_star);

/// sum_{k=1}^{K} exp(-beta_k * gamma_star).
double partial_sum(const CoolingSchedule& schedule, double gamma_star, std::uint64_t steps);

/// Parses `const:beta=3`, `log:gamma=2,k0=1`, `geom:beta0=0.1,r=1.01`,
/// `linear:beta0=0.1,slope=0.01`, `table:<path>` (whitespace-separated values)
/// or `table:=v1,v2,...` (inline). Throws std::invalid_argument.
CoolingSchedule parse_schedule(std::string_view text);

}  // namespace daanneal
