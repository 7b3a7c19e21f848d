#include "daanneal/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace daanneal {

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw std::length_error(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(cap) + " vertices");
}

double tolerance_for(const IsingInstance& instance) {
  return instance.is_integral() ? 0.0 : kDefaultEnergyQuantum;
}

// States reachable from `start` through states with energy <= height.
std::vector<StateIndex> flood(const IsingInstance& instance, StateIndex start, double height) {
  const std::size_t n = instance.size();
  const double slack = tolerance_for(instance);
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<StateIndex> out;
  if (energy(instance, SpinConfiguration::from_rank(n, start)) > height + slack) return out;
  seen[start] = true;
  out.push_back(start);
  for (std::size_t head = 0; head < out.size(); ++head) {
    const StateIndex s = out[head];
    for (std::size_t x = 0; x < n; ++x) {
      const StateIndex t = s ^ (StateIndex{1} << x);
      if (seen[t]) continue;
      seen[t] = true;
      if (energy(instance, SpinConfiguration::from_rank(n, t)) <= height + slack) out.push_back(t);
    }
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), StateIndex{0});
  }

  StateIndex find(StateIndex s) {
    while (parent_[s] != s) {
      parent_[s] = parent_[parent_[s]];
      s = parent_[s];
    }
    return s;
  }

  /// Returns (survivor, absorbed).
  std::pair<StateIndex, StateIndex> unite(StateIndex a, StateIndex b) {
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return {a, b};
  }

 private:
  std::vector<StateIndex> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

EnergyLevels energy_levels(const IsingInstance& instance, double quantum) {
  const std::size_t n = instance.size();
  check_cap(n, kMaxLandscapeVertices, "energy_levels");
  const std::size_t states = std::size_t{1} << n;

  EnergyLevels out;
  out.vertices = n;
  out.exact = instance.is_integral();
  out.quantum = out.exact ? 0.0 : quantum;
  out.energy.resize(states);
  for (StateIndex s = 0; s < states; ++s) {
    const auto sigma = SpinConfiguration::from_rank(n, s);
    out.energy[s] = out.exact ? static_cast<double>(integer_energy(instance, sigma))
                              : energy(instance, sigma);
  }

  std::vector<StateIndex> order(states);
  std::iota(order.begin(), order.end(), StateIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](StateIndex a, StateIndex b) { return out.energy[a] < out.energy[b]; });

  out.level.resize(states);
  double previous = 0.0;
  for (std::size_t i = 0; i < states; ++i) {
    const double e = out.energy[order[i]];
    if (i == 0 || e - previous > out.quantum) {
      out.level_energy.push_back(e);
    } else if (e != previous) {
      out.close_levels = true;
    }
    out.level[order[i]] = static_cast<std::uint32_t>(out.level_energy.size() - 1);
    previous = e;
  }
  return out;
}

bool reachable_at_height(const IsingInstance& instance, const SpinConfiguration& sigma,
                         const SpinConfiguration& tau, double height) {
  check_cap(instance.size(), kMaxLandscapeVertices, "reachable_at_height");
  if (sigma.size() != instance.size() || tau.size() != instance.size())
    throw std::invalid_argument("reachable_at_height: configuration length mismatch");
  const double slack = tolerance_for(instance);
  if (energy(instance, tau) > height + slack) return false;
  const auto region = flood(instance, sigma.rank(), height);
  return std::find(region.begin(), region.end(), tau.rank()) != region.end();
}

LandscapeReport minima_depths(const EnergyLevels& levels) {
  const std::size_t n = levels.vertices;
  const std::size_t states = levels.states();
  const std::size_t level_count = levels.level_energy.size();

  // Bucket states by level, ascending state index within a level.
  std::vector<std::size_t> start(level_count + 1, 0);
  for (auto l : levels.level) ++start[l + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<StateIndex> by_level(states);
  {
    auto fill = start;
    for (StateIndex s = 0; s < states; ++s) by_level[fill[levels.level[s]]++] = s;
  }

  UnionFind uf(states);
  std::vector<bool> active(states, false);
  std::vector<std::uint32_t> min_level(levels.level.begin(), levels.level.end());
  // Local minima of a component that has not yet met a strictly lower state.
  std::vector<std::vector<StateIndex>> pending(states);
  std::vector<double> depth(states, -1.0);

  for (std::size_t l = 0; l < level_count; ++l) {
    const double height = levels.level_energy[l];
    for (std::size_t i = start[l]; i < start[l + 1]; ++i) active[by_level[i]] = true;

    for (std::size_t i = start[l]; i < start[l + 1]; ++i) {
      const StateIndex s = by_level[i];
      for (std::size_t x = 0; x < n; ++x) {
        const StateIndex t = s ^ (StateIndex{1} << x);
        if (!active[t]) continue;
        StateIndex a = uf.find(s);
        StateIndex b = uf.find(t);
        if (a == b) continue;
        const auto level_a = min_level[a];
        const auto level_b = min_level[b];
        // The side with the higher minimum just met a strictly lower state.
        if (level_a != level_b) {
          const StateIndex higher = level_a > level_b ? a : b;
          const double bottom = levels.level_energy[min_level[higher]];
          for (StateIndex m : pending[higher]) depth[m] = height - bottom;
          pending[higher].clear();
          pending[higher].shrink_to_fit();
        }
        const auto [root, absorbed] = uf.unite(a, b);
        min_level[root] = std::min(level_a, level_b);
        auto& into = pending[root];
        auto& from = pending[absorbed];
        into.insert(into.end(), from.begin(), from.end());
        from.clear();
        from.shrink_to_fit();
      }
    }

    for (std::size_t i = start[l]; i < start[l + 1]; ++i) {
      const StateIndex s = by_level[i];
      const StateIndex root = uf.find(s);
      if (min_level[root] == l) pending[root].push_back(s);
    }
  }

  LandscapeReport report;
  report.vertices = n;
  report.exact_arithmetic = levels.exact;
  report.close_levels = levels.close_levels;
  report.ground_energy = levels.level_energy.front();
  for (StateIndex s = 0; s < states; ++s) {
    const bool ground = levels.level[s] == 0;
    if (ground) report.ground_states.push_back(s);
    if (ground || depth[s] >= 0.0) {
      LocalMinimum m;
      m.state = s;
      m.energy = levels.energy[s];
      if (!ground) {
        m.depth = depth[s];
        report.gamma_star = std::max(report.gamma_star, depth[s]);
      }
      report.local_minima.push_back(m);
    }
  }
  return report;
}

LandscapeReport minima_depths(const IsingInstance& instance, double quantum) {
  return minima_depths(energy_levels(instance, quantum));
}

std::vector<StateIndex> find_local_minima(const IsingInstance& instance, double quantum) {
  const auto report = minima_depths(instance, quantum);
  std::vector<StateIndex> out;
  out.reserve(report.local_minima.size());
  for (const auto& m : report.local_minima) out.push_back(m.state);
  return out;
}

Cup cup_of(const IsingInstance& instance, const SpinConfiguration& sigma, double height) {
  const std::size_t n = instance.size();
  check_cap(n, kMaxCupVertices, "cup_of");
  if (sigma.size() != n) throw std::invalid_argument("cup_of: configuration length mismatch");
  if (energy(instance, sigma) > height + tolerance_for(instance))
    throw std::invalid_argument("cup_of: starting state lies above the height");

  Cup cup;
  cup.members = flood(instance, sigma.rank(), height);
  std::sort(cup.members.begin(), cup.members.end());

  std::vector<bool> inside(std::size_t{1} << n, false);
  for (auto s : cup.members) inside[s] = true;
  std::vector<bool> on_boundary(std::size_t{1} << n, false);
  for (auto s : cup.members)
    for (std::size_t x = 0; x < n; ++x) {
      const StateIndex t = s ^ (StateIndex{1} << x);
      if (!inside[t]) on_boundary[t] = true;
    }
  for (StateIndex t = 0; t < on_boundary.size(); ++t)
    if (on_boundary[t]) cup.boundary.push_back(t);

  auto energy_of = [&](StateIndex s) {
    const auto c = SpinConfiguration::from_rank(n, s);
    return instance.is_integral() ? static_cast<double>(integer_energy(instance, c))
                                  : energy(instance, c);
  };
  double lowest = INFINITY;
  for (auto s : cup.members) lowest = std::min(lowest, energy_of(s));
  const double slack = tolerance_for(instance);
  for (auto s : cup.members)
    if (energy_of(s) <= lowest + slack) cup.bottom.push_back(s);
  if (!cup.boundary.empty()) {
    double rim = INFINITY;
    for (auto t : cup.boundary) rim = std::min(rim, energy_of(t));
    cup.depth = rim - lowest;
  }
  return cup;
}

}  // namespace daanneal
