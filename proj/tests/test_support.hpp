#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <random>
#include <string>
#include <vector>

#include "daanneal/io.hpp"
#include "daanneal/ising.hpp"

namespace daanneal::testing {

inline std::string corpus(const std::string& name) { return std::string(DAANNEAL_CORPUS_DIR) + "/" + name; }

inline IsingInstance load(const std::string& name) { return parse_instance(corpus(name)); }

inline IsingInstance ferro2(double j = 1.0) { return IsingInstance(2, {{0, 1, j}}); }

inline SpinConfiguration spins(std::vector<int> s) { return SpinConfiguration::from_spins(s); }

/// Closed-form DA transition matrix of the zero-field pair with coupling j,
/// rows/columns in rank order (--, +-, -+, ++).
inline std::vector<double> pair_matrix(double beta, double j) {
  const double a = std::exp(-2.0 * beta * j);
  const double flip = a * (1.0 - 0.5 * a);
  const double stay = (1.0 - a) * (1.0 - a);
  return {stay, flip, flip, 0.0,  //
          0.5,  0.0,  0.0,  0.5,  //
          0.5,  0.0,  0.0,  0.5,  //
          0.0,  flip, flip, stay};
}

/// Closed-form stationary masses of one aligned and one anti-aligned state of that chain.
inline std::pair<double, double> pair_stationary(double beta, double j) {
  const double up = std::exp(beta * j);
  const double down = std::exp(-beta * j);
  const double z = 2.0 * up + 2.0 * down;
  const double denominator = z + 2.0 * down * (1.0 - std::exp(-2.0 * beta * j));
  return {up / denominator, (down + down * (1.0 - std::exp(-2.0 * beta * j))) / denominator};
}

/// Erdos-Renyi couplings. Integer mode draws J, h from {-2..2}; otherwise Gaussian.
inline IsingInstance random_instance(std::size_t n, std::uint64_t seed, double density = 0.6,
                                     bool integral = false, bool with_fields = true) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> small(-2, 2);
  auto draw = [&] { return integral ? static_cast<double>(small(gen)) : gauss(gen); };
  std::vector<Coupling> couplings;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (unit(gen) < density) couplings.push_back({x, y, draw()});
  std::vector<double> fields(n, 0.0);
  if (with_fields)
    for (auto& h : fields) h = draw();
  return IsingInstance(n, std::move(couplings), std::move(fields));
}

inline IsingInstance field_only(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> fields(n);
  for (auto& h : fields) h = u(gen);
  return IsingInstance(n, {}, std::move(fields));
}

inline std::vector<std::string> corpus_names() {
  return {"single_field.txt", "single_free.txt", "ferro2.txt",     "triangle_afm.txt",
          "mixed3.txt",       "field_only4.txt", "random4.txt",    "double_well4.txt",
          "ferro_path6.txt",  "frustrated6.txt", "ferro_zero7.txt", "gauss8.txt",
          "sk10.txt",         "field_only10.txt"};
}

}  // namespace daanneal::testing
