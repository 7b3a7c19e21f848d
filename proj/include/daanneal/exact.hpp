#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "daanneal/ising.hpp"
#include "daanneal/kernels.hpp"

namespace daanneal {

/// Largest n for a single exact transition row (2^20 states).
inline constexpr std::size_t kMaxRowVertices = 20;
/// Default cap on n for dense chain assembly and stationary solves (4096 states).
inline constexpr std::size_t kDefaultChainVertices = 12;

/// q_y = exp(-beta * E_y(sigma)^+) for every vertex.
std::vector<double> acceptance_probabilities(const IsingInstance& instance,
                                             const SpinConfiguration& sigma, double beta);

/// R(sigma, sigma^x): E[1 / (K + 1)] where K counts independent acceptances
/// among V \ {x}. Evaluated by convolving the Bernoulli count distribution, O(n^2).
double r_factor(const IsingInstance& instance, const SpinConfiguration& sigma, Vertex x,
                double beta);

/// One row of a transition matrix. Only sigma itself and its single-flip
/// neighbors can carry mass, so the row is stored as (stay, flip[x]).
struct TransitionRow {
  double stay = 0.0;
  std::vector<double> flip;

  double total() const;
  /// Dense expansion over all 2^n states, indexed by configuration rank.
  std::vector<double> dense(const SpinConfiguration& sigma) const;
};

/// DA row: flip[x] = R(sigma, sigma^x) * q_x, stay = prod_y (1 - q_y).
TransitionRow exact_da_row(const IsingInstance& instance, const SpinConfiguration& sigma,
                           double beta);

/// Single-site Metropolis row: flip[x] = q_x / n, stay = 1 - sum_x flip[x].
TransitionRow exact_metropolis_row(const IsingInstance& instance, const SpinConfiguration& sigma,
                                   double beta);

TransitionRow exact_row(KernelKind kind, const IsingInstance& instance,
                        const SpinConfiguration& sigma, double beta);

/// Dense row-stochastic matrix over all 2^n configurations, row-major,
/// indexed by configuration rank.
struct ExactChain {
  std::size_t vertices = 0;
  double beta = 0.0;
  KernelKind kind = KernelKind::DigitalAnnealer;
  std::vector<double> matrix;

  std::size_t states() const { return std::size_t{1} << vertices; }
  double at(std::size_t from, std::size_t to) const { return matrix[from * states() + to]; }
};

/// Assembles every row; throws std::length_error when n exceeds max_vertices
/// and std::runtime_error when a row fails the stochasticity check (1e-12).
ExactChain build_chain(const IsingInstance& instance, double beta, KernelKind kind,
                       std::size_t max_vertices = kDefaultChainVertices);

struct StationaryResult {
  std::vector<double> pi;
  double residual_l1 = 0.0;  // || pi P - pi ||_1
};

/// Solves pi P = pi, sum(pi) = 1 directly by GTH state reduction (Gaussian
/// elimination without subtractions), stable down to transition probabilities
/// far below machine epsilon. Throws std::runtime_error when the chain is not
/// irreducible, or (message carries the residual) when ||pi P - pi||_1
/// exceeds `tolerance`.
StationaryResult stationary(const ExactChain& chain, double tolerance = 1e-12);

/// pi_G(sigma) proportional to exp(-beta H(sigma)), over all 2^n states.
std::vector<double> gibbs(const IsingInstance& instance, double beta,
                          std::size_t max_vertices = kMaxRowVertices);

/// Per-state check of the identity
///   (pi_G P_DA)(s) - pi_G(s) = pi_G(s) * sum_x q_x(s) (R(s^x, s) - R(s, s^x)).
/// `matrix_side` is computed from the assembled chain, `r_side` from R-factors.
struct GibbsResidual {
  std::vector<double> matrix_side;
  std::vector<double> r_side;
  double max_abs_difference = 0.0;
  bool agree = false;
};

GibbsResidual gibbs_residual(const IsingInstance& instance, double beta, double tolerance = 1e-12,
                             std::size_t max_vertices = kDefaultChainVertices);

/// R(up, up^x) against R(up^x, up) at the all-up ground state of a
/// zero-field ferromagnet.
struct RMonotonicityReport {
  struct Entry {
    Vertex vertex = 0;
    double forward = 0.0;   // R(sigma, sigma^x)
    double backward = 0.0;  // R(sigma^x, sigma)
    bool strict_expected = false;
    bool holds = false;
  };
  std::vector<Entry> entries;
  bool holds = false;
};

/// Throws std::invalid_argument unless all J >= 0 and h == 0.
RMonotonicityReport r_monotonicity_check(const IsingInstance& instance, double beta);

/// Sum of |p_i - q_i|.
double l1_distance(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace daanneal
