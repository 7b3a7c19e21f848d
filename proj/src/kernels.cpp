#include "daanneal/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace daanneal {

double acceptance_probability(double cost, double beta) {
  if (cost <= 0.0) return 1.0;
  if (std::isinf(beta)) return 0.0;
  return std::exp(-beta * cost);
}

namespace {

bool accepts(double cost, double beta, double u) {
  return cost <= 0.0 || u < acceptance_probability(cost, beta);
}

void check_beta(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("inverse temperature must be positive");
}

}  // namespace

StepOutcome da_step(const IsingInstance& instance, SpinConfiguration& sigma, CavityCache& cache,
                    double beta, Rng& rng) {
  check_beta(beta);
  thread_local std::vector<Vertex> eligible;
  eligible.clear();
  const auto n = static_cast<Vertex>(instance.size());
  for (Vertex x = 0; x < n; ++x) {
    const double u = rng.uniform();
    if (accepts(cache.cost(sigma, x), beta, u)) eligible.push_back(x);
  }
  StepOutcome out;
  out.eligible_count = eligible.size();
  if (eligible.empty()) return out;
  const Vertex x = eligible[rng.below(eligible.size())];
  flip_update(cache, instance, sigma, x);
  sigma.flip(x);
  out.moved = true;
  out.flipped_vertex = x;
  return out;
}

StepOutcome metropolis_step(const IsingInstance& instance, SpinConfiguration& sigma,
                            CavityCache& cache, double beta, Rng& rng) {
  check_beta(beta);
  const auto x = static_cast<Vertex>(rng.below(instance.size()));
  const double u = rng.uniform();
  StepOutcome out;
  if (!accepts(cache.cost(sigma, x), beta, u)) return out;
  flip_update(cache, instance, sigma, x);
  sigma.flip(x);
  out.moved = true;
  out.flipped_vertex = x;
  out.eligible_count = 1;
  return out;
}

}  // namespace daanneal
