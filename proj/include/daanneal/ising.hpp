#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "daanneal/spin.hpp"

namespace daanneal {

struct Coupling {
  Vertex x = 0;
  Vertex y = 0;
  double value = 0.0;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  double coupling = 0.0;
};

/// Ising model H(s) = -1/2 sum_{x,y} J_xy s_x s_y - sum_x h_x s_x on n vertices.
///
/// Couplings are given once per unordered pair; the stored map is symmetric by
/// construction. Self-couplings, out-of-range indices and repeated pairs
/// (in either orientation) throw std::invalid_argument. Immutable once built.
class IsingInstance {
 public:
  IsingInstance(std::size_t n, std::vector<Coupling> couplings, std::vector<double> fields = {});

  std::size_t size() const { return n_; }

  /// Couplings in canonical form (x < y), sorted by (x, y).
  const std::vector<Coupling>& couplings() const { return couplings_; }
  const std::vector<double>& fields() const { return fields_; }
  double field(Vertex x) const { return fields_[x]; }
  std::span<const Neighbor> neighbors(Vertex x) const { return adjacency_[x]; }

  /// J_xy, 0 when the pair is not coupled.
  double coupling(Vertex x, Vertex y) const;

  /// True when every J and h is an integer small enough for exact int64 energies.
  bool is_integral() const { return integral_; }

  bool is_field_only() const;
  bool has_zero_fields() const;

  friend bool operator==(const IsingInstance& a, const IsingInstance& b) {
    return a.n_ == b.n_ && a.couplings_ == b.couplings_ && a.fields_ == b.fields_;
  }

 private:
  std::size_t n_;
  std::vector<Coupling> couplings_;
  std::vector<double> fields_;
  std::vector<std::vector<Neighbor>> adjacency_;
  bool integral_ = false;
};

double energy(const IsingInstance& instance, const SpinConfiguration& sigma);

/// Exact integer energy; throws std::domain_error unless instance.is_integral().
std::int64_t integer_energy(const IsingInstance& instance, const SpinConfiguration& sigma);

/// h~_x(s) = sum_y J_xy s_y + h_x.
double cavity_field(const IsingInstance& instance, const SpinConfiguration& sigma, Vertex x);

/// E_x(s) = H(s^x) - H(s) = 2 h~_x(s) s_x.
double energy_cost(const IsingInstance& instance, const SpinConfiguration& sigma, Vertex x);

/// Cavity fields of one configuration, maintained incrementally under flips.
class CavityCache {
 public:
  CavityCache() = default;
  CavityCache(const IsingInstance& instance, const SpinConfiguration& sigma);

  /// Recompute every field from scratch for (instance, sigma).
  void bind(const IsingInstance& instance, const SpinConfiguration& sigma);

  double field(Vertex x) const { return values_[x]; }
  std::span<const double> values() const { return values_; }

  /// E_x for the bound configuration.
  double cost(const SpinConfiguration& sigma, Vertex x) const {
    return 2.0 * values_[x] * sigma.spin(x);
  }

 private:
  friend void flip_update(CavityCache&, const IsingInstance&, const SpinConfiguration&, Vertex);
  std::vector<double> values_;
};

/// Rebinds `cache` from (instance, sigma) to (instance, sigma^x). `sigma` is the
/// configuration before the flip; the caller flips it afterwards. Touches only
/// the neighbors of x.
void flip_update(CavityCache& cache, const IsingInstance& instance, const SpinConfiguration& sigma,
                 Vertex x);

}  // namespace daanneal
