#include "daanneal/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace daanneal {

namespace {

constexpr double kMaxExactMagnitude = 1e12;

bool is_small_integer(double v) {
  return std::isfinite(v) && std::nearbyint(v) == v && std::fabs(v) <= kMaxExactMagnitude;
}

void check_lengths(const IsingInstance& instance, const SpinConfiguration& sigma) {
  if (sigma.size() != instance.size())
    throw std::invalid_argument("configuration has " + std::to_string(sigma.size()) +
                                " spins, instance has " + std::to_string(instance.size()) +
                                " vertices");
}

void check_vertex(const IsingInstance& instance, Vertex x) {
  if (x >= instance.size())
    throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
}

}  // namespace

IsingInstance::IsingInstance(std::size_t n, std::vector<Coupling> couplings,
                             std::vector<double> fields)
    : n_(n), fields_(std::move(fields)), adjacency_(n) {
  if (n == 0) throw std::invalid_argument("instance needs at least one vertex");
  if (fields_.empty()) fields_.assign(n, 0.0);
  if (fields_.size() != n) throw std::invalid_argument("field vector length differs from n");

  for (auto& c : couplings) {
    if (c.x >= n || c.y >= n)
      throw std::invalid_argument("coupling (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                  ") has a vertex index >= n");
    if (c.x == c.y) throw std::invalid_argument("self-coupling on vertex " + std::to_string(c.x));
    if (!std::isfinite(c.value)) throw std::invalid_argument("non-finite coupling value");
    if (c.x > c.y) std::swap(c.x, c.y);
  }
  std::sort(couplings.begin(), couplings.end(),
            [](const Coupling& a, const Coupling& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  for (std::size_t i = 1; i < couplings.size(); ++i) {
    if (couplings[i].x == couplings[i - 1].x && couplings[i].y == couplings[i - 1].y)
      throw std::invalid_argument("duplicate coupling (" + std::to_string(couplings[i].x) + "," +
                                  std::to_string(couplings[i].y) + ")");
  }
  couplings_ = std::move(couplings);

  integral_ = true;
  for (double h : fields_) {
    if (!std::isfinite(h)) throw std::invalid_argument("non-finite field value");
    integral_ = integral_ && is_small_integer(h);
  }
  for (const auto& c : couplings_) {
    adjacency_[c.x].push_back({c.y, c.value});
    adjacency_[c.y].push_back({c.x, c.value});
    integral_ = integral_ && is_small_integer(c.value);
  }
}

double IsingInstance::coupling(Vertex x, Vertex y) const {
  for (const auto& nb : adjacency_.at(x))
    if (nb.vertex == y) return nb.coupling;
  return 0.0;
}

bool IsingInstance::is_field_only() const {
  return std::all_of(couplings_.begin(), couplings_.end(),
                     [](const Coupling& c) { return c.value == 0.0; });
}

bool IsingInstance::has_zero_fields() const {
  return std::all_of(fields_.begin(), fields_.end(), [](double h) { return h == 0.0; });
}

double energy(const IsingInstance& instance, const SpinConfiguration& sigma) {
  check_lengths(instance, sigma);
  double pair = 0.0;
  double field = 0.0;
  for (Vertex x = 0; x < instance.size(); ++x) {
    double local = 0.0;
    for (const auto& nb : instance.neighbors(x)) local += nb.coupling * sigma.spin(nb.vertex);
    pair += local * sigma.spin(x);
    field += instance.field(x) * sigma.spin(x);
  }
  return -0.5 * pair - field;
}

std::int64_t integer_energy(const IsingInstance& instance, const SpinConfiguration& sigma) {
  check_lengths(instance, sigma);
  if (!instance.is_integral()) throw std::domain_error("instance has non-integer couplings or fields");
  std::int64_t total = 0;
  for (const auto& c : instance.couplings())
    total -= static_cast<std::int64_t>(c.value) * sigma.spin(c.x) * sigma.spin(c.y);
  for (Vertex x = 0; x < instance.size(); ++x)
    total -= static_cast<std::int64_t>(instance.field(x)) * sigma.spin(x);
  return total;
}

double cavity_field(const IsingInstance& instance, const SpinConfiguration& sigma, Vertex x) {
  check_lengths(instance, sigma);
  check_vertex(instance, x);
  double h = instance.field(x);
  for (const auto& nb : instance.neighbors(x)) h += nb.coupling * sigma.spin(nb.vertex);
  return h;
}

double energy_cost(const IsingInstance& instance, const SpinConfiguration& sigma, Vertex x) {
  return 2.0 * cavity_field(instance, sigma, x) * sigma.spin(x);
}

CavityCache::CavityCache(const IsingInstance& instance, const SpinConfiguration& sigma) {
  bind(instance, sigma);
}

void CavityCache::bind(const IsingInstance& instance, const SpinConfiguration& sigma) {
  check_lengths(instance, sigma);
  values_.resize(instance.size());
  for (Vertex x = 0; x < instance.size(); ++x) {
    double h = instance.field(x);
    for (const auto& nb : instance.neighbors(x)) h += nb.coupling * sigma.spin(nb.vertex);
    values_[x] = h;
  }
}

void flip_update(CavityCache& cache, const IsingInstance& instance, const SpinConfiguration& sigma,
                 Vertex x) {
  check_vertex(instance, x);
  if (cache.values_.size() != instance.size())
    throw std::logic_error("cavity cache is not bound to this instance");
  const double delta = -2.0 * sigma.spin(x);  // new spin minus old spin
  for (const auto& nb : instance.neighbors(x)) cache.values_[nb.vertex] += nb.coupling * delta;
}

}  // namespace daanneal
