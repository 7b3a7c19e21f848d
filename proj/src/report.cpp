#include "daanneal/report.hpp"

#include <charconv>
#include <cmath>
#include <variant>

#include "daanneal/io.hpp"

namespace daanneal {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json depth_value(double depth) { return std::isinf(depth) ? json("infinity") : json(depth); }

std::string csv_number(double v) {
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, v).ptr;
  return std::string(buf, end);
}

std::string csv_optional(const std::optional<double>& v) { return v ? csv_number(*v) : ""; }

}  // namespace

json to_json(const RunConfig& config, const RunTrace& trace) {
  const std::size_t n = config.instance.size();
  json out;
  out["config"] = {
      {"instance", config.label},
      {"vertices", n},
      {"kernel", to_string(config.kernel)},
      {"schedule", config.schedule.describe()},
      {"steps", config.steps},
      {"replicas", config.replicas},
      {"seed", config.seed},
      {"initial_state", to_string(config.initial)},
      {"record_stride", config.record_stride},
  };
  if (config.given_state) out["config"]["given_state"] = format_spins(*config.given_state);
  out["ground_energy"] = optional_number(trace.ground_energy);
  out["ground_state_count"] = trace.ground_state_count;

  json points = json::array();
  for (const auto& p : trace.points) {
    points.push_back({
        {"step", p.step},
        {"beta", optional_number(p.beta)},
        {"success", optional_number(p.success)},
        {"success_stderr", optional_number(p.success_stderr)},
        {"mean_energy", p.mean_energy},
        {"best_mean", p.best_mean},
        {"best_min", p.best_min},
        {"best_max", p.best_max},
    });
  }
  out["points"] = std::move(points);

  json histogram = json::array();
  for (const auto& [rank, count] : trace.final_histogram)
    histogram.push_back({{"state", rank},
                         {"spins", format_spins(SpinConfiguration::from_rank(n, rank))},
                         {"count", count}});
  out["final_histogram"] = std::move(histogram);
  if (!trace.occupation.empty()) out["occupation"] = trace.occupation;
  if (!trace.replica_energy.empty()) {
    out["replica_energy"] = trace.replica_energy;
    out["replica_best"] = trace.replica_best;
  }
  return out;
}

json to_json(const LandscapeReport& report) {
  const std::size_t n = report.vertices;
  json out;
  out["vertices"] = n;
  out["exact_arithmetic"] = report.exact_arithmetic;
  out["close_levels"] = report.close_levels;
  out["ground_energy"] = report.ground_energy;
  out["gamma_star"] = report.gamma_star;
  json ground = json::array();
  for (auto s : report.ground_states)
    ground.push_back({{"state", s}, {"spins", format_spins(SpinConfiguration::from_rank(n, s))}});
  out["ground_states"] = std::move(ground);
  json minima = json::array();
  for (const auto& m : report.local_minima)
    minima.push_back({{"state", m.state},
                      {"spins", format_spins(SpinConfiguration::from_rank(n, m.state))},
                      {"energy", m.energy},
                      {"depth", depth_value(m.depth)}});
  out["local_minima"] = std::move(minima);
  return out;
}

json to_json(const RMonotonicityReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"vertex", e.vertex},
                       {"forward", e.forward},
                       {"backward", e.backward},
                       {"strict_expected", e.strict_expected},
                       {"holds", e.holds}});
  return {{"holds", report.holds}, {"entries", std::move(entries)}};
}

json stationary_report(const IsingInstance& instance, double beta, KernelKind kind) {
  const auto chain = build_chain(instance, beta, kind);
  const auto pi = stationary(chain);
  const auto pi_gibbs = gibbs(instance, beta);
  const auto residual = gibbs_residual(instance, beta);
  json out;
  out["vertices"] = instance.size();
  out["beta"] = beta;
  out["kernel"] = to_string(kind);
  out["pi"] = pi.pi;
  out["stationary_residual_l1"] = pi.residual_l1;
  out["gibbs"] = pi_gibbs;
  out["l1_to_gibbs"] = l1_distance(pi.pi, pi_gibbs);
  out["gibbs_residual"] = {
      {"matrix_side", residual.matrix_side},
      {"r_side", residual.r_side},
      {"max_abs_difference", residual.max_abs_difference},
      {"agree", residual.agree},
  };
  return out;
}

json classify_report(const CoolingSchedule& schedule, double gamma_star,
                     const std::vector<std::uint64_t>& horizons) {
  json out;
  out["schedule"] = schedule.describe();
  out["gamma_star"] = gamma_star;
  out["classification"] = std::string(to_string(classify_condition(schedule, gamma_star)));
  json sums = json::array();
  std::uint64_t limit = UINT64_MAX;
  if (const auto* table = std::get_if<schedule::Table>(&schedule.family())) limit = table->values.size();
  for (auto k : horizons) {
    if (k > limit) continue;
    sums.push_back({{"steps", k}, {"sum", partial_sum(schedule, gamma_star, k)}});
  }
  out["partial_sums"] = std::move(sums);
  return out;
}

std::string trace_csv(const RunTrace& trace) {
  std::string out = "step,beta,success,success_stderr,mean_energy,best_mean,best_min,best_max\n";
  for (const auto& p : trace.points) {
    out += std::to_string(p.step) + "," + csv_optional(p.beta) + "," + csv_optional(p.success) + "," +
           csv_optional(p.success_stderr) + "," + csv_number(p.mean_energy) + "," +
           csv_number(p.best_mean) + "," + csv_number(p.best_min) + "," + csv_number(p.best_max) + "\n";
  }
  return out;
}

std::string landscape_csv(const IsingInstance& instance, const LandscapeReport& report) {
  const std::size_t n = instance.size();
  std::vector<double> depth(std::size_t{1} << n, -1.0);
  for (const auto& m : report.local_minima) depth[m.state] = m.depth;
  const auto levels = energy_levels(instance);
  std::string out = "state,spins,energy,is_local_min,depth\n";
  for (std::uint64_t s = 0; s < depth.size(); ++s) {
    const bool minimum = depth[s] >= 0.0;
    out += std::to_string(s) + "," + format_spins(SpinConfiguration::from_rank(n, s)) + "," +
           csv_number(levels.energy[s]) + "," + (minimum ? "1" : "0") + "," +
           (minimum ? (std::isinf(depth[s]) ? std::string("inf") : csv_number(depth[s])) : "") + "\n";
  }
  return out;
}

std::string matrix_csv(const ExactChain& chain) {
  std::string out = "row,col,value\n";
  const std::size_t states = chain.states();
  for (std::size_t i = 0; i < states; ++i)
    for (std::size_t j = 0; j < states; ++j)
      if (const double v = chain.at(i, j); v != 0.0)
        out += std::to_string(i) + "," + std::to_string(j) + "," + csv_number(v) + "\n";
  return out;
}

json matrix_json(const ExactChain& chain) {
  json entries = json::array();
  const std::size_t states = chain.states();
  for (std::size_t i = 0; i < states; ++i)
    for (std::size_t j = 0; j < states; ++j)
      if (const double v = chain.at(i, j); v != 0.0) entries.push_back({i, j, v});
  return {{"states", states},
          {"beta", chain.beta},
          {"kernel", to_string(chain.kind)},
          {"entries", std::move(entries)}};
}

}  // namespace daanneal
