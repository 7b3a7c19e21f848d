#include "daanneal/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "daanneal/exact.hpp"
#include "daanneal/landscape.hpp"
#include "daanneal/reference.hpp"

namespace daanneal {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed || c.skipped; });
}

namespace {

constexpr double kTolerance = 1e-12;

VerifyCheck within(std::string name, double error, double tolerance = kTolerance) {
  VerifyCheck c;
  c.name = std::move(name);
  c.max_error = error;
  c.passed = error <= tolerance;
  std::ostringstream os;
  os << "max error " << error << " (tolerance " << tolerance << ")";
  c.detail = os.str();
  return c;
}

VerifyCheck skipped(std::string name, std::string why) {
  VerifyCheck c;
  c.name = std::move(name);
  c.skipped = true;
  c.detail = std::move(why);
  return c;
}

}  // namespace

VerifyReport verify_instance(const IsingInstance& instance, double beta) {
  const std::size_t n = instance.size();
  if (n > kMaxVerifyVertices)
    throw std::length_error("verify: n = " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxVerifyVertices));
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("verify: beta must be positive");
  const std::size_t states = std::size_t{1} << n;
  VerifyReport report;

  {  // Energy, flip cost and cavity maintenance.
    double energy_err = 0.0;
    double cost_err = 0.0;
    for (std::uint64_t s = 0; s < states; ++s) {
      const auto sigma = SpinConfiguration::from_rank(n, s);
      const double h = energy(instance, sigma);
      energy_err = std::max(energy_err, std::fabs(h - reference::literal_energy(instance, sigma)));
      for (Vertex x = 0; x < n; ++x) {
        const double diff = energy(instance, sigma.flipped(x)) - h;
        cost_err = std::max(cost_err, std::fabs(energy_cost(instance, sigma, x) - diff) /
                                          std::max(1.0, std::fabs(diff)));
      }
    }
    report.checks.push_back(within("energy matches literal double sum", energy_err));
    report.checks.push_back(within("flip cost equals energy difference", cost_err));

    // Gray-code walk through every state with an incrementally maintained cache.
    auto sigma = SpinConfiguration(n);
    CavityCache cache(instance, sigma);
    double cache_err = 0.0;
    for (std::uint64_t i = 1; i < states; ++i) {
      const auto x = static_cast<Vertex>(std::countr_zero(i));
      flip_update(cache, instance, sigma, x);
      sigma.flip(x);
      const CavityCache fresh(instance, sigma);
      for (Vertex y = 0; y < n; ++y) cache_err = std::max(cache_err, std::fabs(cache.field(y) - fresh.field(y)));
    }
    report.checks.push_back(within("incremental cavity fields match recomputation", cache_err));
  }

  {  // R-factor and DA rows against subset enumeration.
    double r_err = 0.0;
    double row_err = 0.0;
    double sum_err = 0.0;
    double dominance = 0.0;
    bool support_ok = true;
    for (std::uint64_t s = 0; s < states; ++s) {
      const auto sigma = SpinConfiguration::from_rank(n, s);
      for (Vertex x = 0; x < n; ++x)
        r_err = std::max(r_err, std::fabs(r_factor(instance, sigma, x, beta) -
                                          reference::subset_r_factor(instance, sigma, x, beta)));
      const auto row = exact_da_row(instance, sigma, beta);
      const auto dense = row.dense(sigma);
      const auto literal = reference::subset_da_row(instance, sigma, beta);
      for (std::size_t t = 0; t < states; ++t) {
        row_err = std::max(row_err, std::fabs(dense[t] - literal[t]));
        const auto hamming = std::popcount(static_cast<std::uint64_t>(s ^ t));
        support_ok = support_ok && dense[t] >= 0.0 && (hamming <= 1 || dense[t] == 0.0);
      }
      sum_err = std::max(sum_err, std::fabs(row.total() - 1.0));
      const auto metro = exact_metropolis_row(instance, sigma, beta);
      sum_err = std::max(sum_err, std::fabs(metro.total() - 1.0));
      for (Vertex x = 0; x < n; ++x) dominance = std::max(dominance, metro.flip[x] - row.flip[x]);
    }
    report.checks.push_back(within("R-factor convolution equals subset sum", r_err));
    report.checks.push_back(within("DA row equals subset enumeration", row_err));
    report.checks.push_back(within("rows sum to one", sum_err));
    VerifyCheck support;
    support.name = "rows nonnegative and supported on single flips";
    support.passed = support_ok;
    report.checks.push_back(support);
    report.checks.push_back(within("DA off-diagonal dominates Metropolis", std::max(0.0, dominance), 1e-15));
  }

  const auto pi_gibbs = gibbs(instance, beta);
  {
    const auto residual = gibbs_residual(instance, beta);
    report.checks.push_back(within("Gibbs residual: matrix side equals R side", residual.max_abs_difference));

    const auto metro = build_chain(instance, beta, KernelKind::Metropolis);
    double balance = 0.0;
    for (std::size_t a = 0; a < states; ++a)
      for (std::size_t b = 0; b < states; ++b)
        balance = std::max(balance, std::fabs(pi_gibbs[a] * metro.at(a, b) - pi_gibbs[b] * metro.at(b, a)));
    report.checks.push_back(within("Metropolis detailed balance with Gibbs", balance));
  }

  {
    const auto chain = build_chain(instance, beta, KernelKind::DigitalAnnealer);
    try {
      const auto pi = stationary(chain);
      report.checks.push_back(within("stationary residual", pi.residual_l1));
      const auto power = reference::power_iteration(chain.matrix, states);
      report.checks.push_back(within("direct solve agrees with power iteration", l1_distance(pi.pi, power), 1e-9));
      if (instance.is_field_only())
        report.checks.push_back(within("field-only: DA stationary equals Gibbs", l1_distance(pi.pi, pi_gibbs), 1e-10));
      else
        report.checks.push_back(skipped("field-only: DA stationary equals Gibbs", "instance has couplings"));
    } catch (const std::runtime_error& e) {
      VerifyCheck c;
      c.name = "stationary residual";
      c.detail = e.what();
      report.checks.push_back(c);
    }
  }

  {
    const bool ferro = instance.has_zero_fields() &&
                       std::all_of(instance.couplings().begin(), instance.couplings().end(),
                                   [](const Coupling& c) { return c.value >= 0.0; });
    if (ferro) {
      const auto mono = r_monotonicity_check(instance, beta);
      VerifyCheck c;
      c.name = "R monotonicity at the all-up ground state";
      c.passed = mono.holds;
      report.checks.push_back(c);
    } else {
      report.checks.push_back(
          skipped("R monotonicity at the all-up ground state", "not a zero-field ferromagnet"));
    }
  }

  {
    const auto landscape = minima_depths(instance);
    const auto naive = reference::naive_depths(instance);
    std::vector<double> fast(states, -1.0);
    for (const auto& m : landscape.local_minima) fast[m.state] = m.depth;
    VerifyCheck c;
    c.name = "union-find depths equal threshold-BFS depths";
    c.passed = true;
    for (std::size_t s = 0; s < states; ++s) {
      const bool same = instance.is_integral() ? fast[s] == naive[s]
                        : std::isinf(fast[s]) || std::isinf(naive[s])
                            ? fast[s] == naive[s]
                            : std::fabs(fast[s] - naive[s]) <= 1e-9;
      if (!same) c.passed = false;
      if (!std::isinf(fast[s]) && !std::isinf(naive[s]))
        c.max_error = std::max(c.max_error, std::fabs(fast[s] - naive[s]));
    }
    c.detail = instance.is_integral() ? "exact integer comparison" : "float comparison, tolerance 1e-9";
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace daanneal
