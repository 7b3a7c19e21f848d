#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>

#include "daanneal/exact.hpp"
#include "daanneal/kernels.hpp"
#include "daanneal/rng.hpp"
#include "test_support.hpp"

using namespace daanneal;
using daanneal::testing::ferro2;
using daanneal::testing::random_instance;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Empirical one-step distribution from sigma, indexed by target rank.
std::vector<double> sample_row(KernelKind kind, const IsingInstance& inst, const SpinConfiguration& sigma,
                               double beta, std::uint64_t samples, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> counts(std::size_t{1} << inst.size(), 0.0);
  CavityCache cache(inst, sigma);
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto s = sigma;
    auto c = cache;
    step(kind, inst, s, c, beta, rng);
    counts[s.rank()] += 1.0;
  }
  for (auto& c : counts) c /= static_cast<double>(samples);
  return counts;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  return 0.5 * l1_distance(p, q);
}

}  // namespace

TEST_CASE("rng conversions") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
  CHECK(r.below(1) == 0);
  // The engine is the standard 64-bit Mersenne Twister: its 10000th output is fixed.
  Rng default_seeded(std::mt19937_64::default_seed);
  for (int i = 0; i < 9999; ++i) default_seeded.next();
  CHECK(default_seeded.next() == 9981545732273789042ULL);
}

TEST_CASE("derive_replica_seed") {
  CHECK(derive_replica_seed(7, 3) == derive_replica_seed(7, 3));
  CHECK(derive_replica_seed(7, 0) != derive_replica_seed(7, 1));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(derive_replica_seed(12345, i));
  CHECK(seen.size() == 10000);
}

TEST_CASE("acceptance probability") {
  CHECK(acceptance_probability(-1.0, 1.0) == 1.0);
  CHECK(acceptance_probability(0.0, kInf) == 1.0);
  CHECK(acceptance_probability(2.0, kInf) == 0.0);
  const double p = acceptance_probability(2.0, 0.5);
  CHECK(p == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(p > 0.0);
  CHECK(p < 1.0);
}

TEST_CASE("da_step examples") {
  SUBCASE("anti-aligned pair always moves, each vertex half the time") {
    const auto inst = ferro2();
    const auto start = testing::spins({1, -1});
    Rng rng(5);
    int flipped0 = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
      auto s = start;
      CavityCache cache(inst, s);
      const auto out = da_step(inst, s, cache, 1.0, rng);
      REQUIRE(out.moved);
      REQUIRE(out.eligible_count == 2);
      if (*out.flipped_vertex == 0) ++flipped0;
    }
    CHECK(std::fabs(flipped0 / double(trials) - 0.5) < 0.02);
  }
  SUBCASE("beta = infinity at a strict minimum never moves") {
    const auto inst = ferro2();
    auto s = SpinConfiguration::all_up(2);
    CavityCache cache(inst, s);
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
      const auto out = da_step(inst, s, cache, kInf, rng);
      CHECK_FALSE(out.moved);
      CHECK_FALSE(out.flipped_vertex.has_value());
      CHECK(out.eligible_count == 0);
    }
    CHECK(s == SpinConfiguration::all_up(2));
  }
  SUBCASE("nonpositive beta is rejected") {
    const auto inst = ferro2();
    auto s = SpinConfiguration::all_up(2);
    CavityCache cache(inst, s);
    Rng rng(1);
    CHECK_THROWS_AS(da_step(inst, s, cache, 0.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(metropolis_step(inst, s, cache, -1.0, rng), std::invalid_argument);
  }
}

TEST_CASE("metropolis_step examples") {
  const auto inst = ferro2();
  const double beta = 0.4;
  const auto up = SpinConfiguration::all_up(2);
  const auto empirical = sample_row(KernelKind::Metropolis, inst, up, beta, 200000, 3);
  const double expected = 0.5 * std::exp(-2.0 * beta);
  CHECK(std::fabs(empirical[testing::spins({-1, 1}).rank()] - expected) < 0.005);
  CHECK(std::fabs(empirical[testing::spins({1, -1}).rank()] - expected) < 0.005);

  auto s = up;
  CavityCache cache(inst, s);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) CHECK_FALSE(metropolis_step(inst, s, cache, kInf, rng).moved);
}

TEST_CASE("one-step distribution matches the exact rows (n = 3, beta = 0.7)") {
  const auto inst = random_instance(3, 2024);
  const double beta = 0.7;
  for (std::uint64_t r = 0; r < 8; r += 3) {
    const auto sigma = SpinConfiguration::from_rank(3, r);
    for (auto kind : {KernelKind::DigitalAnnealer, KernelKind::Metropolis}) {
      const auto exact = exact_row(kind, inst, sigma, beta).dense(sigma);
      const auto empirical = sample_row(kind, inst, sigma, beta, 1000000, 17 + r);
      CHECK(total_variation(exact, empirical) <= 0.003);
    }
  }
}

TEST_CASE("eligibility frequencies per vertex") {
  // With a frozen state, vertex x is eligible with probability q_x; the count
  // distribution of |S| therefore has mean sum_x q_x.
  const auto inst = random_instance(5, 31);
  const auto sigma = SpinConfiguration::from_rank(5, 13);
  const double beta = 0.8;
  const auto q = acceptance_probabilities(inst, sigma, beta);
  double mean_expected = 0.0;
  for (double v : q) {
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
    mean_expected += v;
  }
  Rng rng(4);
  double total = 0.0;
  const int trials = 200000;
  for (int i = 0; i < trials; ++i) {
    auto s = sigma;
    CavityCache cache(inst, s);
    total += static_cast<double>(da_step(inst, s, cache, beta, rng).eligible_count);
  }
  CHECK(std::fabs(total / trials - mean_expected) < 0.01);
}

TEST_CASE("trajectories: single flips, cache consistency, determinism") {
  const auto inst = random_instance(12, 8, 0.4);
  auto run = [&](std::uint64_t seed, KernelKind kind) {
    Rng rng(seed);
    auto s = SpinConfiguration(12);
    CavityCache cache(inst, s);
    std::vector<std::uint64_t> path;
    for (int k = 0; k < 5000; ++k) {
      const auto before = s;
      const auto out = step(kind, inst, s, cache, 0.3 + 0.001 * k, rng);
      std::size_t hamming = 0;
      for (Vertex x = 0; x < 12; ++x) hamming += before.spin(x) != s.spin(x);
      REQUIRE(hamming == (out.moved ? 1u : 0u));
      REQUIRE(out.moved == out.flipped_vertex.has_value());
      if (kind == KernelKind::DigitalAnnealer) REQUIRE(out.moved == (out.eligible_count >= 1));
      path.push_back(s.rank());
    }
    for (Vertex y = 0; y < 12; ++y)
      CHECK(cache.field(y) == doctest::Approx(cavity_field(inst, s, y)).epsilon(1e-12));
    return path;
  };
  for (auto kind : {KernelKind::DigitalAnnealer, KernelKind::Metropolis}) {
    CHECK(run(99, kind) == run(99, kind));
    CHECK(run(99, kind) != run(100, kind));
  }
}
