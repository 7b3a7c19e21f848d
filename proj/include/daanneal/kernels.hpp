#pragma once

#include <cstddef>
#include <optional>

#include "daanneal/ising.hpp"
#include "daanneal/rng.hpp"

namespace daanneal {

struct StepOutcome {
  bool moved = false;
  std::optional<Vertex> flipped_vertex;
  /// Size of the eligible set for the parallel-trial kernel; 1 or 0 for
  /// single-site Metropolis (accepted or not).
  std::size_t eligible_count = 0;
};

/// Acceptance probability exp(-beta * max(cost, 0)); beta may be +infinity.
double acceptance_probability(double cost, double beta);

/// One step of the parallel-trial chain at inverse temperature beta.
///
/// Draw order is part of the reproducibility contract: one uniform per vertex
/// in order 0..n-1 (vertex x is eligible iff cost <= 0 or u < exp(-beta*cost)),
/// then, if any vertex is eligible, one below(|S|) draw selecting the flipped
/// vertex among the eligible ones in increasing vertex order.
StepOutcome da_step(const IsingInstance& instance, SpinConfiguration& sigma, CavityCache& cache,
                    double beta, Rng& rng);

/// Single-site Metropolis step: below(n) picks x, then one uniform decides the flip.
StepOutcome metropolis_step(const IsingInstance& instance, SpinConfiguration& sigma,
                            CavityCache& cache, double beta, Rng& rng);

enum class KernelKind { DigitalAnnealer, Metropolis };

inline StepOutcome step(KernelKind kind, const IsingInstance& instance, SpinConfiguration& sigma,
                        CavityCache& cache, double beta, Rng& rng) {
  return kind == KernelKind::DigitalAnnealer ? da_step(instance, sigma, cache, beta, rng)
                                             : metropolis_step(instance, sigma, cache, beta, rng);
}

}  // namespace daanneal
