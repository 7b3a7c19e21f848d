#include "daanneal/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "daanneal/landscape.hpp"

namespace daanneal {

std::string_view to_string(InitialState policy) {
  switch (policy) {
    case InitialState::UniformRandom: return "uniform-random";
    case InitialState::AllUp: return "all-up";
    case InitialState::Given: return "given";
  }
  return "uniform-random";
}

InitialState parse_initial_state(std::string_view text) {
  if (text == "uniform-random") return InitialState::UniformRandom;
  if (text == "all-up") return InitialState::AllUp;
  if (text == "given") return InitialState::Given;
  throw std::invalid_argument("unknown initial-state policy '" + std::string(text) + "'");
}

std::string_view to_string(KernelKind kind) {
  return kind == KernelKind::DigitalAnnealer ? "da" : "metropolis";
}

KernelKind parse_kernel(std::string_view text) {
  if (text == "da") return KernelKind::DigitalAnnealer;
  if (text == "metropolis") return KernelKind::Metropolis;
  throw std::invalid_argument("unknown kernel '" + std::string(text) + "'");
}

std::vector<std::uint64_t> record_steps(std::uint64_t steps, std::uint64_t stride) {
  if (stride == 0) throw std::invalid_argument("record stride must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k <= steps; k += stride) out.push_back(k);
  if (out.back() != steps) out.push_back(steps);
  return out;
}

namespace {

constexpr std::size_t kMaxTrackedVertices = kMaxLandscapeVertices;

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kThreadsEnv)) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void validate(const RunConfig& config) {
  const std::size_t n = config.instance.size();
  if (config.replicas == 0) throw std::invalid_argument("replicas must be at least 1");
  if (config.record_stride == 0) throw std::invalid_argument("record stride must be positive");
  if (config.initial == InitialState::Given) {
    if (!config.given_state) throw std::invalid_argument("initial policy 'given' needs a state");
    if (config.given_state->size() != n)
      throw std::invalid_argument("given initial state has the wrong length");
  }
  if (config.track_success && n > kMaxTrackedVertices)
    throw std::length_error("success tracking needs exhaustive ground states; n = " +
                            std::to_string(n) + " exceeds " + std::to_string(kMaxTrackedVertices));
  if (config.track_occupation && n > kMaxTrackedVertices)
    throw std::length_error("occupation tracking needs n <= " + std::to_string(kMaxTrackedVertices));
  if (config.steps > 0) {
    // Table schedules must cover every step; surface that before running.
    (void)beta_at(config.schedule, config.steps);
  }
}

struct ReplicaResult {
  std::vector<double> energy;   // per trace point
  std::vector<double> best;     // per trace point
  std::vector<char> success;    // per trace point
  std::uint64_t final_rank = 0;
};

}  // namespace

RunTrace run_annealing(const RunConfig& config) {
  validate(config);
  const IsingInstance& instance = config.instance;
  const std::size_t n = instance.size();
  const bool small = n <= kMaxTrackedVertices;
  const auto points = record_steps(config.steps, config.record_stride);

  std::vector<double> betas(config.steps);
  for (std::uint64_t k = 1; k <= config.steps; ++k) {
    betas[k - 1] = beta_at(config.schedule, k);
    if (!(betas[k - 1] > 0.0))
      throw std::invalid_argument("schedule gives beta_" + std::to_string(k) + " <= 0");
  }

  RunTrace trace;
  trace.vertices = n;
  std::vector<char> is_ground;
  if (config.track_success) {
    const auto landscape = minima_depths(instance);
    trace.ground_energy = landscape.ground_energy;
    trace.ground_state_count = landscape.ground_states.size();
    is_ground.assign(std::size_t{1} << n, 0);
    for (auto s : landscape.ground_states) is_ground[s] = 1;
  }

  const unsigned thread_count =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(config.threads), config.replicas));
  std::vector<ReplicaResult> results(config.replicas);
  std::vector<std::vector<std::uint64_t>> occupation(
      config.track_occupation ? thread_count : 0, std::vector<std::uint64_t>(small ? std::size_t{1} << n : 0));
  std::atomic<std::uint64_t> next_replica{0};

  auto run_replica = [&](std::uint64_t index, std::vector<std::uint64_t>* visits) {
    Rng rng(derive_replica_seed(config.seed, index));
    SpinConfiguration sigma = config.initial == InitialState::AllUp ? SpinConfiguration::all_up(n)
                              : config.initial == InitialState::Given ? *config.given_state
                                                                     : SpinConfiguration(n);
    if (config.initial == InitialState::UniformRandom)
      for (Vertex x = 0; x < n; ++x) sigma.set(x, rng.coin() ? 1 : -1);
    CavityCache cache(instance, sigma);

    ReplicaResult& out = results[index];
    out.energy.reserve(points.size());
    out.best.reserve(points.size());
    double current = energy(instance, sigma);
    double best = current;
    std::size_t next_point = 0;
    auto record = [&] {
      current = energy(instance, sigma);
      best = std::min(best, current);
      out.energy.push_back(current);
      out.best.push_back(best);
      if (config.track_success) out.success.push_back(is_ground[sigma.rank()]);
      ++next_point;
    };
    record();
    for (std::uint64_t k = 1; k <= config.steps; ++k) {
      const auto moved = step(config.kernel, instance, sigma, cache, betas[k - 1], rng);
      if (moved.moved) {
        current -= cache.cost(sigma, *moved.flipped_vertex);
        best = std::min(best, current);
      }
      if (visits) ++(*visits)[sigma.rank()];
      if (next_point < points.size() && points[next_point] == k) record();
    }
    out.final_rank = small ? sigma.rank() : 0;
  };

  auto worker = [&](unsigned t) {
    std::vector<std::uint64_t>* visits = config.track_occupation ? &occupation[t] : nullptr;
    for (std::uint64_t i = next_replica++; i < config.replicas; i = next_replica++) run_replica(i, visits);
  };
  if (thread_count <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker, t);
  }

  // Reduction in replica order keeps floating-point sums independent of scheduling.
  const double m = static_cast<double>(config.replicas);
  for (std::size_t p = 0; p < points.size(); ++p) {
    TracePoint tp;
    tp.step = points[p];
    if (tp.step > 0) tp.beta = betas[tp.step - 1];
    double energy_sum = 0.0;
    double best_sum = 0.0;
    tp.best_min = std::numeric_limits<double>::infinity();
    tp.best_max = -std::numeric_limits<double>::infinity();
    std::uint64_t hits = 0;
    for (const auto& r : results) {
      energy_sum += r.energy[p];
      best_sum += r.best[p];
      tp.best_min = std::min(tp.best_min, r.best[p]);
      tp.best_max = std::max(tp.best_max, r.best[p]);
      if (config.track_success) hits += r.success[p] ? 1 : 0;
    }
    tp.mean_energy = energy_sum / m;
    tp.best_mean = best_sum / m;
    if (config.track_success) {
      const double phat = static_cast<double>(hits) / m;
      tp.success = phat;
      tp.success_stderr = std::sqrt(phat * (1.0 - phat) / m);
    }
    trace.points.push_back(tp);
  }
  if (small)
    for (const auto& r : results) ++trace.final_histogram[r.final_rank];
  if (config.track_occupation) {
    trace.occupation.assign(std::size_t{1} << n, 0);
    for (const auto& part : occupation)
      for (std::size_t s = 0; s < part.size(); ++s) trace.occupation[s] += part[s];
  }
  if (config.keep_replica_traces) {
    trace.replica_energy.assign(points.size(), std::vector<double>(config.replicas));
    trace.replica_best.assign(points.size(), std::vector<double>(config.replicas));
    for (std::size_t i = 0; i < results.size(); ++i)
      for (std::size_t p = 0; p < points.size(); ++p) {
        trace.replica_energy[p][i] = results[i].energy[p];
        trace.replica_best[p][i] = results[i].best[p];
      }
  }
  return trace;
}

}  // namespace daanneal
