#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daanneal/ising.hpp"
#include "daanneal/kernels.hpp"
#include "daanneal/schedules.hpp"

namespace daanneal {

enum class InitialState { UniformRandom, AllUp, Given };

std::string_view to_string(InitialState policy);
InitialState parse_initial_state(std::string_view text);
std::string_view to_string(KernelKind kind);
KernelKind parse_kernel(std::string_view text);

/// Environment variable holding the default worker-thread count.
inline constexpr const char* kThreadsEnv = "DAANNEAL_THREADS";

struct RunConfig {
  IsingInstance instance;
  CoolingSchedule schedule;
  KernelKind kernel = KernelKind::DigitalAnnealer;
  std::uint64_t steps = 1;
  std::uint64_t replicas = 1;
  std::uint64_t seed = 0;
  InitialState initial = InitialState::UniformRandom;
  std::optional<SpinConfiguration> given_state;
  /// Trace points are taken at step 0, every multiple of the stride, and step K.
  std::uint64_t record_stride = 1;
  /// Ground-state membership per trace point; needs n <= 20.
  bool track_success = true;
  /// Per-state visit counts over steps 1..K summed over replicas; needs n <= 20.
  bool track_occupation = false;
  /// Keep per-replica energies at every trace point in the result.
  bool keep_replica_traces = false;
  /// Worker threads; 0 reads DAANNEAL_THREADS, then hardware concurrency.
  unsigned threads = 0;
  std::string label;
};

struct TracePoint {
  std::uint64_t step = 0;
  std::optional<double> beta;  // empty at step 0
  std::optional<double> success;
  std::optional<double> success_stderr;
  double mean_energy = 0.0;
  double best_mean = 0.0;
  double best_min = 0.0;
  double best_max = 0.0;
};

struct RunTrace {
  std::size_t vertices = 0;
  std::optional<double> ground_energy;
  std::size_t ground_state_count = 0;
  std::vector<TracePoint> points;
  /// Final configuration rank -> replica count (n <= 20 only).
  std::map<std::uint64_t, std::uint64_t> final_histogram;
  std::vector<std::uint64_t> occupation;
  /// [point][replica], filled when keep_replica_traces is set.
  std::vector<std::vector<double>> replica_energy;
  std::vector<std::vector<double>> replica_best;
};

/// Runs M independent replicas of the inhomogeneous chain: replica i uses
/// Rng(derive_replica_seed(seed, i)); step k applies the kernel at beta_k.
/// Uniform-random initial states take one coin() per vertex in vertex order
/// before the first step. The result depends only on the config, never on
/// the thread count or scheduling.
RunTrace run_annealing(const RunConfig& config);

/// Steps at which trace points are taken.
std::vector<std::uint64_t> record_steps(std::uint64_t steps, std::uint64_t stride);

}  // namespace daanneal
