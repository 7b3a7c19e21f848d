#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "daanneal/schedules.hpp"

using namespace daanneal;

namespace {

CoolingSchedule log_schedule(double gamma, double k0 = 1.0) { return CoolingSchedule(schedule::Logarithmic{gamma, k0}); }

}  // namespace

TEST_CASE("beta_at examples") {
  const auto log0 = log_schedule(2.0, 0.0);
  for (std::uint64_t k : {1, 7, 8, 1000}) CHECK(beta_at(log0, k) == std::log(static_cast<double>(k)) / 2.0);

  const CoolingSchedule constant(schedule::Constant{1.5});
  for (std::uint64_t k : {1, 2, 1000000}) CHECK(beta_at(constant, k) == 1.5);

  const CoolingSchedule table(schedule::Table{{0.1, 0.2, 0.2, 0.5}});
  CHECK(beta_at(table, 3) == 0.2);
  CHECK(beta_at(table, 4) == 0.5);
  CHECK_THROWS_AS(beta_at(table, 5), std::out_of_range);
  CHECK_THROWS_AS(beta_at(constant, 0), std::out_of_range);

  const CoolingSchedule geom(schedule::Geometric{0.1, 1.01});
  CHECK(beta_at(geom, 1) == 0.1);
  CHECK(beta_at(geom, 101) == doctest::Approx(0.1 * std::pow(1.01, 100)).epsilon(1e-14));
  const CoolingSchedule linear(schedule::Linear{0.1, 0.01});
  CHECK(beta_at(linear, 11) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("construction validates the family domain") {
  CHECK_THROWS_AS(CoolingSchedule(schedule::Constant{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Logarithmic{0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Logarithmic{1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Geometric{0.1, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Geometric{-0.1, 1.1}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Linear{0.1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Table{{}}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Table{{0.5, 0.4}}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Table{{0.0, 0.4}}), std::invalid_argument);
  CHECK_THROWS_AS(CoolingSchedule(schedule::Constant{INFINITY}), std::invalid_argument);

  // k0 = 0 starts at beta_1 = 0, which a run cannot use.
  CHECK_FALSE(is_valid_prefix(log_schedule(1.0, 0.0), 10));
  CHECK(is_valid_prefix(log_schedule(1.0, 1.0), 10000));
}

TEST_CASE("classify_condition examples") {
  CHECK(classify_condition(log_schedule(2.0), 2.0) == Divergence::Diverges);
  CHECK(classify_condition(log_schedule(1.0), 2.0) == Divergence::Converges);
  CHECK(classify_condition(CoolingSchedule(schedule::Geometric{1.0, std::exp(1.0)}), 1.0) == Divergence::Converges);
  CHECK(classify_condition(CoolingSchedule(schedule::Geometric{1.0, 2.0}), 0.0) == Divergence::Diverges);
  CHECK(classify_condition(CoolingSchedule(schedule::Linear{0.1, 0.1}), 0.5) == Divergence::Converges);
  CHECK(classify_condition(CoolingSchedule(schedule::Constant{3.0}), 4.0) == Divergence::Diverges);
  CHECK(classify_condition(CoolingSchedule(schedule::Table{{1.0, 2.0}}), 1.0) == Divergence::Unknown);
  CHECK_THROWS_AS(classify_condition(log_schedule(1.0), -1.0), std::invalid_argument);
  CHECK(to_string(Divergence::Converges) == "Converges");
}

TEST_CASE("logarithmic classification over a grid") {
  for (double gamma : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 8.0})
    for (double gamma_star : {0.0, 0.25, 0.5, 1.0, 2.0, 2.5, 3.0, 10.0})
      CHECK((classify_condition(log_schedule(gamma), gamma_star) == Divergence::Diverges) == (gamma >= gamma_star));
}

TEST_CASE("partial_sum examples") {
  CHECK(partial_sum(log_schedule(1.5), 0.0, 1234) == 1234.0);
  const CoolingSchedule constant(schedule::Constant{0.7});
  CHECK(partial_sum(constant, 2.0, 500) == doctest::Approx(500 * std::exp(-1.4)).epsilon(1e-12));

  for (std::uint64_t k : {10, 1000, 100000}) {
    double harmonic = 0.0;
    for (std::uint64_t i = 1; i <= k; ++i) harmonic += 1.0 / static_cast<double>(i);
    CHECK(std::fabs(partial_sum(log_schedule(2.0, 0.0), 2.0, k) - harmonic) <= 0.01 * harmonic);
  }
}

TEST_CASE("monotonicity over random parameters") {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<CoolingSchedule> schedules{
        CoolingSchedule(schedule::Constant{u(gen)}), log_schedule(u(gen), u(gen)),
        CoolingSchedule(schedule::Geometric{u(gen), 1.0 + u(gen) / 100.0}),
        CoolingSchedule(schedule::Linear{u(gen), u(gen) / 10.0})};
    const double gamma_star = u(gen);
    for (const auto& s : schedules) {
      CHECK(is_valid_prefix(s, 2000));
      double previous_sum = 0.0;
      for (std::uint64_t k = 1; k <= 200; ++k) {
        const double sum = partial_sum(s, gamma_star, k);
        REQUIRE(sum >= previous_sum);
        previous_sum = sum;
      }
    }
  }
}

TEST_CASE("parse_schedule") {
  CHECK(std::get<schedule::Logarithmic>(parse_schedule("log:gamma=2").family()).k0 == 1.0);
  const auto log = std::get<schedule::Logarithmic>(parse_schedule("log:gamma=2,k0=3").family());
  CHECK(log.gamma == 2.0);
  CHECK(log.k0 == 3.0);
  CHECK(std::get<schedule::Geometric>(parse_schedule("geom:beta0=0.1,r=1.01").family()).ratio == 1.01);
  CHECK(std::get<schedule::Linear>(parse_schedule("linear:beta0=0.5,slope=0.25").family()).slope == 0.25);
  CHECK(std::get<schedule::Constant>(parse_schedule("const:beta=3").family()).beta == 3.0);
  CHECK(std::get<schedule::Table>(parse_schedule("table:=0.1,0.2,0.4").family()).values ==
        std::vector<double>{0.1, 0.2, 0.4});

  const std::string path = "daanneal_schedule_table.txt";
  {
    std::ofstream out(path);
    out << "0.5 0.75\n1.0\n";
  }
  CHECK(std::get<schedule::Table>(parse_schedule("table:" + path).family()).values ==
        std::vector<double>{0.5, 0.75, 1.0});
  std::remove(path.c_str());

  for (const char* bad : {"log", "log:gamma", "log:k0=1", "log:gamma=x", "log:gamma=1,gamma=2",
                          "geom:beta0=0.1,r=0.9", "cubic:beta=1", "const:beta=1,extra=2",
                          "table:=0.3,0.2", "table:/nonexistent/file"})
    CHECK_THROWS_AS(parse_schedule(bad), std::invalid_argument);

  // describe() round-trips through the parser.
  for (const char* spec : {"log:gamma=2,k0=1", "geom:beta0=0.1,r=1.01", "linear:beta0=0.1,slope=0.01",
                           "const:beta=1.5", "table:=0.1,0.2"}) {
    const auto s = parse_schedule(spec);
    CHECK(parse_schedule(s.describe()).describe() == s.describe());
    CHECK(s.describe() == spec);
  }
}
