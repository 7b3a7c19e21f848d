// daanneal: annealing runs, exact stationary analysis, landscape depths,
// schedule classification and exact-vs-reference verification for Ising
// instances in the plain-text instance format.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "daanneal/exact.hpp"
#include "daanneal/harness.hpp"
#include "daanneal/io.hpp"
#include "daanneal/landscape.hpp"
#include "daanneal/report.hpp"
#include "daanneal/schedules.hpp"
#include "daanneal/verify.hpp"

using namespace daanneal;
using nlohmann::json;

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

void emit(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text(out_path, text);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel-trial (Digital Annealer) simulated annealing toolkit for Ising/QUBO instances"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report here instead of stdout");

  // anneal
  auto* anneal = app.add_subcommand("anneal", "Run replicas of the annealing chain");
  std::string instance_path, kernel = "da", schedule_spec, csv_path, init = "uniform-random", given;
  std::uint64_t steps = 1000, replicas = 1, seed = 0, stride = 1;
  unsigned threads = 0;
  bool occupation = false;
  anneal->add_option("--instance", instance_path, "Instance file")->required();
  anneal->add_option("--kernel", kernel, "da | metropolis")->check(CLI::IsMember({"da", "metropolis"}));
  anneal->add_option("--schedule", schedule_spec, "e.g. log:gamma=2,k0=1")->required();
  anneal->add_option("--steps", steps, "Steps K per replica")->required();
  anneal->add_option("--replicas", replicas, "Replica count M")->required()->check(CLI::PositiveNumber);
  anneal->add_option("--seed", seed, "Master seed")->required();
  anneal->add_option("--record-stride", stride, "Trace point stride")->check(CLI::PositiveNumber);
  anneal->add_option("--csv", csv_path, "Also write the trace as CSV");
  anneal->add_option("--init", init, "uniform-random | all-up | given")
      ->check(CLI::IsMember({"uniform-random", "all-up", "given"}));
  anneal->add_option("--initial-state", given, "Spin string for --init given, e.g. +--+");
  anneal->add_option("--threads", threads, "Worker threads (default: $DAANNEAL_THREADS or all cores)");
  anneal->add_flag("--occupation", occupation, "Record per-state visit counts");

  // stationary
  auto* stat = app.add_subcommand("stationary", "Exact stationary distribution at fixed beta");
  double beta = 1.0;
  std::string dump_matrix;
  stat->add_option("--instance", instance_path, "Instance file")->required();
  stat->add_option("--beta", beta, "Inverse temperature")->required()->check(CLI::PositiveNumber);
  stat->add_option("--kernel", kernel, "da | metropolis")->check(CLI::IsMember({"da", "metropolis"}));
  stat->add_option("--dump-matrix", dump_matrix, "Write the transition matrix (.csv or .json)");

  // landscape
  auto* land = app.add_subcommand("landscape", "Ground states, local minima, depths and gamma*");
  land->add_option("--instance", instance_path, "Instance file")->required();
  land->add_option("--csv", csv_path, "Also write per-state CSV");

  // classify
  auto* classify = app.add_subcommand("classify", "Decide divergence of sum_k exp(-beta_k gamma*)");
  double gamma_star = 0.0;
  classify->add_option("--schedule", schedule_spec, "Schedule spec")->required();
  classify->add_option("--gamma-star", gamma_star, "gamma*")->required()->check(CLI::NonNegativeNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check exact routines against literal evaluators");
  verify->add_option("--instance", instance_path, "Instance file")->required();
  verify->add_option("--beta", beta, "Inverse temperature")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*anneal) {
      RunConfig config{.instance = parse_instance(instance_path),
                       .schedule = parse_schedule(schedule_spec)};
      config.kernel = parse_kernel(kernel);
      config.steps = steps;
      config.replicas = replicas;
      config.seed = seed;
      config.record_stride = stride;
      config.initial = parse_initial_state(init);
      if (!given.empty()) config.given_state = parse_spins(given);
      config.track_success = config.instance.size() <= kMaxLandscapeVertices;
      config.track_occupation = occupation;
      config.threads = threads;
      config.label = instance_path;
      const auto trace = run_annealing(config);
      if (!csv_path.empty()) write_text(csv_path, trace_csv(trace));
      emit(to_json(config, trace), out_path);
      return 0;
    }
    if (*stat) {
      const auto instance = parse_instance(instance_path);
      const auto kind = parse_kernel(kernel);
      auto doc = stationary_report(instance, beta, kind);
      doc["instance"] = instance_path;
      if (!dump_matrix.empty()) {
        const auto chain = build_chain(instance, beta, kind);
        write_text(dump_matrix, ends_with(dump_matrix, ".json") ? matrix_json(chain).dump() + "\n"
                                                                : matrix_csv(chain));
      }
      emit(doc, out_path);
      return 0;
    }
    if (*land) {
      const auto instance = parse_instance(instance_path);
      const auto report = minima_depths(instance);
      auto doc = to_json(report);
      doc["instance"] = instance_path;
      if (!csv_path.empty()) write_text(csv_path, landscape_csv(instance, report));
      emit(doc, out_path);
      return 0;
    }
    if (*classify) {
      const auto schedule = parse_schedule(schedule_spec);
      emit(classify_report(schedule, gamma_star, {10, 100, 1000, 10000, 100000, 1000000}), out_path);
      return 0;
    }
    if (*verify) {
      const auto instance = parse_instance(instance_path);
      const auto report = verify_instance(instance, beta);
      json checks = json::array();
      for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"skipped", c.skipped},
                          {"max_error", c.max_error},
                          {"detail", c.detail}});
      emit({{"instance", instance_path}, {"beta", beta}, {"passed", report.passed()}, {"checks", checks}},
           out_path);
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "daanneal: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
