#include "daanneal/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace daanneal::reference {

std::vector<std::vector<double>> dense_couplings(const IsingInstance& instance) {
  const std::size_t n = instance.size();
  std::vector<std::vector<double>> j(n, std::vector<double>(n, 0.0));
  for (const auto& c : instance.couplings()) {
    j[c.x][c.y] = c.value;
    j[c.y][c.x] = c.value;
  }
  return j;
}

namespace {

double literal_energy_dense(const std::vector<std::vector<double>>& j,
                            const std::vector<double>& h, const std::vector<int>& s) {
  double pair = 0.0;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) pair += j[x][y] * s[x] * s[y];
  double field = 0.0;
  for (std::size_t x = 0; x < s.size(); ++x) field += h[x] * s[x];
  return -0.5 * pair - field;
}

// exp(-beta * max(H(s^y) - H(s), 0)) from two literal energy evaluations.
std::vector<double> literal_acceptance(const IsingInstance& instance,
                                       const SpinConfiguration& sigma, double beta) {
  const auto j = dense_couplings(instance);
  const auto s = sigma.to_spins();
  const double base = literal_energy_dense(j, instance.fields(), s);
  std::vector<double> q(s.size());
  for (std::size_t y = 0; y < s.size(); ++y) {
    auto t = s;
    t[y] = -t[y];
    const double cost = literal_energy_dense(j, instance.fields(), t) - base;
    q[y] = cost <= 0.0 ? 1.0 : std::exp(-beta * cost);
  }
  return q;
}

}  // namespace

double literal_energy(const IsingInstance& instance, const SpinConfiguration& sigma) {
  if (sigma.size() != instance.size()) throw std::invalid_argument("literal_energy: length mismatch");
  return literal_energy_dense(dense_couplings(instance), instance.fields(), sigma.to_spins());
}

double subset_r_factor(const IsingInstance& instance, const SpinConfiguration& sigma, Vertex x,
                       double beta) {
  const std::size_t n = instance.size();
  if (n > 24) throw std::length_error("subset_r_factor: too many vertices");
  const auto q = literal_acceptance(instance, sigma, beta);
  double r = 0.0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    if ((subset >> x) & 1u) continue;
    double weight = 1.0;
    std::size_t size = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      if ((subset >> y) & 1u) {
        weight *= q[y];
        ++size;
      } else {
        weight *= 1.0 - q[y];
      }
    }
    r += weight / static_cast<double>(size + 1);
  }
  return r;
}

std::vector<double> subset_da_row(const IsingInstance& instance, const SpinConfiguration& sigma,
                                  double beta) {
  const std::size_t n = instance.size();
  if (n > 20) throw std::length_error("subset_da_row: too many vertices");
  const auto q = literal_acceptance(instance, sigma, beta);
  const std::uint64_t from = sigma.rank();
  std::vector<double> row(std::size_t{1} << n, 0.0);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    double weight = 1.0;
    std::size_t size = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if ((subset >> y) & 1u) {
        weight *= q[y];
        ++size;
      } else {
        weight *= 1.0 - q[y];
      }
    }
    if (size == 0) {
      row[from] += weight;
      continue;
    }
    for (std::size_t y = 0; y < n; ++y)
      if ((subset >> y) & 1u) row[from ^ (std::uint64_t{1} << y)] += weight / static_cast<double>(size);
  }
  return row;
}

std::vector<double> power_iteration(const std::vector<double>& matrix, std::size_t states,
                                    double tolerance, std::size_t max_iterations) {
  struct Entry {
    std::size_t from, to;
    double p;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < states; ++i)
    for (std::size_t j = 0; j < states; ++j)
      if (matrix[i * states + j] != 0.0) entries.push_back({i, j, matrix[i * states + j]});

  std::vector<double> pi(states, 1.0 / static_cast<double>(states));
  std::vector<double> next(states);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (const auto& e : entries) next[e.to] += pi[e.from] * e.p;
    double change = 0.0;
    for (std::size_t i = 0; i < states; ++i) change += std::fabs(next[i] - pi[i]);
    pi.swap(next);
    if (change < tolerance) break;
  }
  return pi;
}

std::vector<double> naive_depths(const IsingInstance& instance, double quantum) {
  const std::size_t n = instance.size();
  if (n > 16) throw std::length_error("naive_depths: too many vertices");
  const std::size_t states = std::size_t{1} << n;
  const auto j = dense_couplings(instance);
  std::vector<double> h(states);
  for (std::uint64_t s = 0; s < states; ++s)
    h[s] = literal_energy_dense(j, instance.fields(), SpinConfiguration::from_rank(n, s).to_spins());

  // Snap each energy to the lowest member of its run of gaps <= quantum.
  std::vector<std::uint64_t> order(states);
  for (std::uint64_t s = 0; s < states; ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return h[a] < h[b]; });
  double anchor = h[order[0]];
  double previous = anchor;
  for (auto s : order) {
    if (h[s] - previous > quantum) anchor = h[s];
    previous = h[s];
    h[s] = anchor;
  }

  std::vector<double> levels(h);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const double ground = levels.front();

  // Is a state with energy < target reachable from start at the given height?
  std::vector<char> seen(states);
  std::vector<std::uint64_t> queue;
  auto lower_reachable = [&](std::uint64_t start, double height, double target) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.assign(1, start);
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto s = queue[head];
      if (h[s] < target) return true;
      for (std::size_t x = 0; x < n; ++x) {
        const auto t = s ^ (std::uint64_t{1} << x);
        if (!seen[t] && h[t] <= height) {
          seen[t] = 1;
          queue.push_back(t);
        }
      }
    }
    return false;
  };

  std::vector<double> depth(states, -1.0);
  for (std::uint64_t s = 0; s < states; ++s) {
    if (h[s] == ground) {
      depth[s] = std::numeric_limits<double>::infinity();
      continue;
    }
    if (lower_reachable(s, h[s], h[s])) continue;
    for (double level : levels) {
      if (level <= h[s]) continue;
      if (lower_reachable(s, level, h[s])) {
        depth[s] = level - h[s];
        break;
      }
    }
  }
  return depth;
}

}  // namespace daanneal::reference
