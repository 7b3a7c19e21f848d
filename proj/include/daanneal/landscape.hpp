#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "daanneal/ising.hpp"

namespace daanneal {

inline constexpr std::size_t kMaxLandscapeVertices = 20;
inline constexpr std::size_t kMaxCupVertices = 16;
inline constexpr double kDefaultEnergyQuantum = 1e-9;

using StateIndex = std::uint64_t;

/// Energies of all 2^n configurations, grouped into levels.
///
/// Integral instances use exact int64 energies and levels are equality
/// classes. Otherwise sorted energies whose consecutive gaps are <= quantum
/// are merged into one level; `close_levels` records that this happened for
/// values that were not bit-identical. A level's energy is the lowest member.
struct EnergyLevels {
  std::size_t vertices = 0;
  bool exact = false;
  bool close_levels = false;
  double quantum = 0.0;
  std::vector<double> energy;         // per state
  std::vector<std::uint32_t> level;   // per state
  std::vector<double> level_energy;   // ascending

  std::size_t states() const { return energy.size(); }
};

EnergyLevels energy_levels(const IsingInstance& instance,
                           double quantum = kDefaultEnergyQuantum);

/// Is tau reachable from sigma through single flips without exceeding height?
bool reachable_at_height(const IsingInstance& instance, const SpinConfiguration& sigma,
                         const SpinConfiguration& tau, double height);

struct LocalMinimum {
  StateIndex state = 0;
  double energy = 0.0;
  /// +infinity for ground states.
  double depth = std::numeric_limits<double>::infinity();
};

struct LandscapeReport {
  std::size_t vertices = 0;
  bool exact_arithmetic = false;
  bool close_levels = false;
  double ground_energy = 0.0;
  std::vector<StateIndex> ground_states;
  std::vector<LocalMinimum> local_minima;  // sorted by state index
  double gamma_star = 0.0;
};

/// States from which no strictly lower state is reachable at their own energy,
/// plateau minima included. Sorted by state index.
std::vector<StateIndex> find_local_minima(const IsingInstance& instance,
                                          double quantum = kDefaultEnergyQuantum);

/// Ground states, every local minimum with its depth, and gamma* (largest
/// depth among non-ground minima, 0 when there are none), from one ascending
/// sweep over energy levels with a union-find over the sublevel sets.
LandscapeReport minima_depths(const IsingInstance& instance,
                              double quantum = kDefaultEnergyQuantum);
LandscapeReport minima_depths(const EnergyLevels& levels);

struct Cup {
  std::vector<StateIndex> members;   // sorted
  std::vector<StateIndex> boundary;  // sorted
  std::vector<StateIndex> bottom;    // sorted
  /// min boundary energy - min member energy; +infinity when the boundary is empty.
  double depth = std::numeric_limits<double>::infinity();
};

/// The set reachable from sigma at height E, with boundary, bottom and depth.
/// Throws std::invalid_argument when H(sigma) > E.
Cup cup_of(const IsingInstance& instance, const SpinConfiguration& sigma, double height);

}  // namespace daanneal
