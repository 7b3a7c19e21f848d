#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "daanneal/ising.hpp"
#include "daanneal/landscape.hpp"

/// Literal, deliberately slow evaluators used to cross-check the production
/// routines. They share no code path with exact.cpp, landscape.cpp or the
/// cavity cache: energies come from a dense coupling matrix and every sum is
/// taken over its defining index set.
namespace daanneal::reference {

/// Dense n x n coupling matrix, symmetric, zero diagonal.
std::vector<std::vector<double>> dense_couplings(const IsingInstance& instance);

/// -1/2 sum over ordered pairs of J_xy s_x s_y - sum_x h_x s_x, as a double loop.
double literal_energy(const IsingInstance& instance, const SpinConfiguration& sigma);

/// R(sigma, sigma^x) by enumerating every subset of V \ {x}.
double subset_r_factor(const IsingInstance& instance, const SpinConfiguration& sigma, Vertex x,
                       double beta);

/// Full DA row over 2^n states by enumerating every eligible set S of V.
std::vector<double> subset_da_row(const IsingInstance& instance, const SpinConfiguration& sigma,
                                  double beta);

/// Stationary vector by power iteration on a dense row-stochastic matrix.
std::vector<double> power_iteration(const std::vector<double>& matrix, std::size_t states,
                                    double tolerance = 1e-14, std::size_t max_iterations = 200000);

/// Local minima and depths by threshold BFS: for each state, flood at its own
/// energy to test minimality, then raise the threshold through the sorted
/// distinct energies until a strictly lower state appears. Depth is -1 for
/// states that are not local minima and +infinity for ground states.
/// Energies whose sorted gaps are <= quantum are first snapped to the lowest
/// of their run (a no-op on integral instances); comparisons are then exact.
std::vector<double> naive_depths(const IsingInstance& instance, double quantum = 1e-9);

}  // namespace daanneal::reference
