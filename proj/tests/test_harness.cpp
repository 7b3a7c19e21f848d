#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "daanneal/harness.hpp"
#include "daanneal/io.hpp"
#include "daanneal/report.hpp"
#include "daanneal/verify.hpp"
#include "test_support.hpp"

using namespace daanneal;
using daanneal::testing::ferro2;
using daanneal::testing::load;
using daanneal::testing::random_instance;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_instance_text(text);
  } catch (const InstanceFormatError& e) {
    return e.line();
  }
  return 0;
}

RunConfig small_run(std::uint64_t steps, std::uint64_t replicas) {
  RunConfig config{.instance = load("double_well4.txt"), .schedule = parse_schedule("log:gamma=2,k0=1")};
  config.steps = steps;
  config.replicas = replicas;
  config.seed = 11;
  config.record_stride = 50;
  return config;
}

}  // namespace

TEST_CASE("parse_instance examples") {
  const auto pair = parse_instance_text("n 2\nJ 0 1 1.0\n");
  CHECK(pair == ferro2());

  const auto commented = parse_instance_text("# header comment\nn 3  # three spins\n\nh 2 -0.5\nJ 2 0 1.5 # reversed\n");
  CHECK(commented.field(2) == -0.5);
  CHECK(commented.coupling(0, 2) == 1.5);

  CHECK(error_line("n 2\nJ 0 0 1.0\n") == 2);
  CHECK(error_line("n 2\n\nJ 0 1 1\nJ 1 0 2\n") == 4);
  CHECK(error_line("n 2\nJ 0 2 1\n") == 2);
  CHECK(error_line("n 2\nh 0 1\nh 0 2\n") == 3);
  CHECK(error_line("h 0 1\nn 2\n") == 1);
  CHECK(error_line("n 2\nJ 0 1\n") == 2);
  CHECK(error_line("n 2\nJ 0 1 abc\n") == 2);
  CHECK(error_line("n 2\nK 0 1 1\n") == 2);
  CHECK(error_line("n 2\nh -1 1\n") == 2);
  CHECK(error_line("n 2\nh 0 nan\n") == 2);
  CHECK(error_line("n 0\n") == 1);
  CHECK(error_line("n 2\nn 3\n") == 2);
  CHECK_THROWS_AS(parse_instance_text("# nothing\n"), InstanceFormatError);
  CHECK_THROWS_AS(parse_instance("/nonexistent/instance.txt"), InstanceFormatError);

  try {
    parse_instance_text("n 2\nJ 0 0 1.0\n");
  } catch (const InstanceFormatError& e) {
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
}

TEST_CASE("instance round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_instance(3 + seed, seed, 0.5, seed % 2 == 0);
    CHECK(parse_instance_text(format_instance(inst)) == inst);
  }
  const std::string path = "daanneal_roundtrip_instance.txt";
  const auto inst = random_instance(9, 99);
  write_instance(path, inst);
  CHECK(parse_instance(path) == inst);
  std::remove(path.c_str());
  for (const auto& name : testing::corpus_names()) {
    const auto c = load(name);
    CHECK(parse_instance_text(format_instance(c)) == c);
  }
}

TEST_CASE("spin strings") {
  const auto s = parse_spins("+--+");
  CHECK(s.to_spins() == std::vector<int>{1, -1, -1, 1});
  CHECK(parse_spins("1001") == s);
  CHECK(format_spins(s) == "+--+");
  CHECK_THROWS_AS(parse_spins("+x"), std::invalid_argument);
}

TEST_CASE("record_steps") {
  CHECK(record_steps(0, 5) == std::vector<std::uint64_t>{0});
  CHECK(record_steps(10, 5) == std::vector<std::uint64_t>{0, 5, 10});
  CHECK(record_steps(12, 5) == std::vector<std::uint64_t>{0, 5, 10, 12});
  CHECK_THROWS_AS(record_steps(10, 0), std::invalid_argument);
}

TEST_CASE("run_annealing: zero steps keeps only the initial state") {
  auto config = small_run(0, 1);
  config.initial = InitialState::AllUp;
  const auto trace = run_annealing(config);
  REQUIRE(trace.points.size() == 1);
  CHECK(trace.points[0].step == 0);
  CHECK_FALSE(trace.points[0].beta.has_value());
  CHECK(trace.points[0].mean_energy == energy(config.instance, SpinConfiguration::all_up(4)));
  CHECK(trace.final_histogram.size() == 1);
  CHECK(trace.final_histogram.begin()->first == 15);
}

TEST_CASE("run_annealing: trace invariants") {
  auto config = small_run(1000, 40);
  config.keep_replica_traces = true;
  const auto trace = run_annealing(config);
  CHECK(trace.ground_energy.has_value());
  CHECK(trace.ground_state_count == 1);
  CHECK(trace.points.size() == 21);
  std::uint64_t total = 0;
  for (const auto& [rank, count] : trace.final_histogram) total += count;
  CHECK(total == 40);
  for (std::size_t p = 0; p < trace.points.size(); ++p) {
    const auto& tp = trace.points[p];
    REQUIRE(tp.success.has_value());
    CHECK(*tp.success >= 0.0);
    CHECK(*tp.success <= 1.0);
    CHECK(*tp.success_stderr == doctest::Approx(std::sqrt(*tp.success * (1 - *tp.success) / 40.0)));
    CHECK(tp.best_min <= tp.best_mean);
    CHECK(tp.best_mean <= tp.best_max);
    if (p > 0) {
      CHECK(*tp.beta == beta_at(config.schedule, tp.step));
      for (std::size_t r = 0; r < 40; ++r) CHECK(trace.replica_best[p][r] <= trace.replica_best[p - 1][r]);
    }
    for (std::size_t r = 0; r < 40; ++r) CHECK(trace.replica_best[p][r] <= trace.replica_energy[p][r]);
  }
}

TEST_CASE("run_annealing: results do not depend on the thread count") {
  auto config = small_run(2000, 24);
  config.track_occupation = true;
  config.threads = 1;
  const auto one = to_json(config, run_annealing(config)).dump();
  config.threads = 4;
  const auto four = to_json(config, run_annealing(config)).dump();
  CHECK(one == four);
  setenv(kThreadsEnv, "3", 1);
  config.threads = 0;
  CHECK(to_json(config, run_annealing(config)).dump() == one);
  unsetenv(kThreadsEnv);
  config.seed = 12;
  CHECK(to_json(config, run_annealing(config)).dump() != one);
}

TEST_CASE("run_annealing: validation") {
  auto config = small_run(10, 1);
  config.replicas = 0;
  CHECK_THROWS_AS(run_annealing(config), std::invalid_argument);
  config = small_run(10, 1);
  config.initial = InitialState::Given;
  CHECK_THROWS_AS(run_annealing(config), std::invalid_argument);
  config.given_state = parse_spins("+-");
  CHECK_THROWS_AS(run_annealing(config), std::invalid_argument);
  config = small_run(10, 1);
  config.schedule = parse_schedule("table:=0.1,0.2");
  CHECK_THROWS_AS(run_annealing(config), std::out_of_range);
  config.schedule = parse_schedule("log:gamma=1,k0=0");
  CHECK_THROWS_AS(run_annealing(config), std::invalid_argument);

  RunConfig big{.instance = random_instance(24, 3, 0.1), .schedule = parse_schedule("const:beta=1")};
  CHECK_THROWS_AS(run_annealing(big), std::length_error);
  big.track_success = false;
  big.steps = 100;
  const auto trace = run_annealing(big);
  CHECK_FALSE(trace.points.back().success.has_value());
  CHECK_FALSE(trace.ground_energy.has_value());
}

TEST_CASE("metropolis runs and given initial states") {
  auto config = small_run(500, 8);
  config.kernel = KernelKind::Metropolis;
  config.initial = InitialState::Given;
  config.given_state = parse_spins("---+");
  const auto trace = run_annealing(config);
  CHECK(trace.points[0].mean_energy == energy(config.instance, parse_spins("---+")));
  CHECK(trace.points[0].success == 0.0);
}

TEST_CASE("reports") {
  const auto landscape = to_json(minima_depths(ferro2()));
  CHECK(landscape["gamma_star"] == 0.0);
  CHECK(landscape["ground_states"].size() == 2);
  CHECK(landscape["local_minima"][0]["depth"] == "infinity");

  const auto stationary = stationary_report(load("field_only4.txt"), 0.9, KernelKind::DigitalAnnealer);
  CHECK(stationary["l1_to_gibbs"].get<double>() < 1e-10);
  CHECK(stationary["gibbs_residual"]["agree"] == true);

  const auto classify = classify_report(parse_schedule("log:gamma=1,k0=1"), 2.0, {10, 100});
  CHECK(classify["classification"] == "Converges");
  CHECK(classify["partial_sums"].size() == 2);

  auto config = small_run(100, 2);
  const auto trace = run_annealing(config);
  const auto csv = trace_csv(trace);
  CHECK(csv.rfind("step,beta,success,success_stderr,mean_energy,best_mean,best_min,best_max\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  const auto chain = build_chain(ferro2(), 1.0, KernelKind::DigitalAnnealer);
  CHECK(matrix_json(chain)["entries"].size() == 10);
  CHECK(matrix_csv(chain).rfind("row,col,value\n", 0) == 0);
}

TEST_CASE("verify passes on the bundled corpus") {
  for (const auto& name : testing::corpus_names()) {
    const auto report = verify_instance(load(name), 0.7);
    std::string failures;
    for (const auto& c : report.checks)
      if (!c.passed && !c.skipped) failures += c.name + " (" + c.detail + "); ";
    CHECK_MESSAGE(report.passed(), name << ": " << failures);
  }
  CHECK_THROWS_AS(verify_instance(random_instance(11, 1), 1.0), std::length_error);
}
