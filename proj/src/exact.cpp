#include "daanneal/exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace daanneal {

namespace {

void check_cap(const IsingInstance& instance, std::size_t max_vertices, const char* what) {
  if (instance.size() > max_vertices)
    throw std::length_error(std::string(what) + ": n = " + std::to_string(instance.size()) +
                            " exceeds the cap of " + std::to_string(max_vertices) + " vertices");
}

// E[1/(K+1)] for K = number of successes among independent trials with the
// given probabilities, skipping index `skip`.
double expected_reciprocal(const std::vector<double>& q, std::size_t skip) {
  std::vector<double> dist(q.size() + 1, 0.0);
  dist[0] = 1.0;
  std::size_t count = 0;
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (y == skip) continue;
    ++count;
    for (std::size_t k = count; k > 0; --k) dist[k] = dist[k] * (1.0 - q[y]) + dist[k - 1] * q[y];
    dist[0] *= 1.0 - q[y];
  }
  double r = 0.0;
  for (std::size_t k = 0; k <= count; ++k) r += dist[k] / static_cast<double>(k + 1);
  return r;
}

}  // namespace

std::vector<double> acceptance_probabilities(const IsingInstance& instance,
                                             const SpinConfiguration& sigma, double beta) {
  std::vector<double> q(instance.size());
  for (Vertex y = 0; y < instance.size(); ++y)
    q[y] = acceptance_probability(energy_cost(instance, sigma, y), beta);
  return q;
}

double r_factor(const IsingInstance& instance, const SpinConfiguration& sigma, Vertex x,
                double beta) {
  if (x >= instance.size()) throw std::out_of_range("r_factor: vertex out of range");
  return expected_reciprocal(acceptance_probabilities(instance, sigma, beta), x);
}

double TransitionRow::total() const {
  double s = stay;
  for (double p : flip) s += p;
  return s;
}

std::vector<double> TransitionRow::dense(const SpinConfiguration& sigma) const {
  if (sigma.size() > kMaxRowVertices) throw std::length_error("dense row: too many vertices");
  std::vector<double> out(std::size_t{1} << sigma.size(), 0.0);
  const std::uint64_t from = sigma.rank();
  out[from] = stay;
  for (std::size_t x = 0; x < flip.size(); ++x) out[from ^ (std::uint64_t{1} << x)] = flip[x];
  return out;
}

TransitionRow exact_da_row(const IsingInstance& instance, const SpinConfiguration& sigma,
                           double beta) {
  check_cap(instance, kMaxRowVertices, "exact_da_row");
  const auto q = acceptance_probabilities(instance, sigma, beta);
  TransitionRow row;
  row.stay = 1.0;
  row.flip.resize(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) {
    row.stay *= 1.0 - q[x];
    row.flip[x] = q[x] == 0.0 ? 0.0 : expected_reciprocal(q, x) * q[x];
  }
  return row;
}

TransitionRow exact_metropolis_row(const IsingInstance& instance, const SpinConfiguration& sigma,
                                   double beta) {
  check_cap(instance, kMaxRowVertices, "exact_metropolis_row");
  const auto q = acceptance_probabilities(instance, sigma, beta);
  const double n = static_cast<double>(q.size());
  TransitionRow row;
  row.flip.resize(q.size());
  double moved = 0.0;
  for (std::size_t x = 0; x < q.size(); ++x) {
    row.flip[x] = q[x] / n;
    moved += row.flip[x];
  }
  row.stay = 1.0 - moved;
  return row;
}

TransitionRow exact_row(KernelKind kind, const IsingInstance& instance,
                        const SpinConfiguration& sigma, double beta) {
  return kind == KernelKind::DigitalAnnealer ? exact_da_row(instance, sigma, beta)
                                             : exact_metropolis_row(instance, sigma, beta);
}

ExactChain build_chain(const IsingInstance& instance, double beta, KernelKind kind,
                       std::size_t max_vertices) {
  check_cap(instance, max_vertices, "build_chain");
  ExactChain chain;
  chain.vertices = instance.size();
  chain.beta = beta;
  chain.kind = kind;
  const std::size_t states = chain.states();
  chain.matrix.assign(states * states, 0.0);
  for (std::uint64_t s = 0; s < states; ++s) {
    const auto sigma = SpinConfiguration::from_rank(instance.size(), s);
    const auto row = exact_row(kind, instance, sigma, beta);
    double* out = chain.matrix.data() + s * states;
    out[s] = row.stay;
    for (std::size_t x = 0; x < row.flip.size(); ++x) out[s ^ (std::uint64_t{1} << x)] = row.flip[x];
    const double total = row.total();
    if (std::fabs(total - 1.0) > 1e-12 || row.stay < 0.0)
      throw std::runtime_error("build_chain: row " + std::to_string(s) + " sums to " +
                               std::to_string(total));
  }
  return chain;
}

namespace {

// Every state reaches state 0 and is reached from it along positive entries.
bool irreducible(const ExactChain& chain) {
  const std::size_t states = chain.states();
  for (bool forward : {true, false}) {
    std::vector<char> seen(states, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < states; ++b) {
        const double w = forward ? chain.at(a, b) : chain.at(b, a);
        if (w > 0.0 && !seen[b]) {
          seen[b] = 1;
          ++count;
          stack.push_back(b);
        }
      }
    }
    if (count != states) return false;
  }
  return true;
}

}  // namespace

StationaryResult stationary(const ExactChain& chain, double tolerance) {
  if (!irreducible(chain))
    throw std::runtime_error("stationary: chain is not irreducible; the stationary law is not unique");
  const std::size_t states = chain.states();

  // Grassmann-Taksar-Heyman state reduction: censor the chain onto states
  // 0..k-1 one state at a time. Only additions, multiplications and
  // divisions of nonnegative numbers occur, so tiny transition
  // probabilities survive even when staying is certain to rounding.
  std::vector<double> p = chain.matrix;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return p[i * states + j]; };
  for (std::size_t k = states - 1; k >= 1; --k) {
    double leave = 0.0;
    for (std::size_t j = 0; j < k; ++j) leave += at(k, j);
    const double* row_k = &p[k * states];
    for (std::size_t i = 0; i < k; ++i) {
      const double w = at(i, k) /= leave;
      if (w == 0.0) continue;
      double* row_i = &p[i * states];
      for (std::size_t j = 0; j < k; ++j) row_i[j] += w * row_k[j];
    }
  }
  std::vector<double> pi(states, 0.0);
  pi[0] = 1.0;
  for (std::size_t k = 1; k < states; ++k)
    for (std::size_t i = 0; i < k; ++i) pi[k] += pi[i] * at(i, k);
  double total = 0.0;
  for (double v : pi) total += v;
  for (double& v : pi) v /= total;

  StationaryResult result;
  std::vector<double> moved(states, 0.0);
  for (std::size_t i = 0; i < states; ++i)
    for (std::size_t j = 0; j < states; ++j) moved[j] += pi[i] * chain.at(i, j);
  result.residual_l1 = l1_distance(moved, pi);
  result.pi = std::move(pi);
  if (!(result.residual_l1 <= tolerance)) {
    std::ostringstream msg;
    msg << "stationary: residual ||pi P - pi||_1 = " << result.residual_l1 << " exceeds "
        << tolerance;
    throw std::runtime_error(msg.str());
  }
  return result;
}

std::vector<double> gibbs(const IsingInstance& instance, double beta, std::size_t max_vertices) {
  check_cap(instance, max_vertices, "gibbs");
  const std::size_t states = std::size_t{1} << instance.size();
  std::vector<double> h(states);
  double lowest = INFINITY;
  for (std::uint64_t s = 0; s < states; ++s) {
    h[s] = energy(instance, SpinConfiguration::from_rank(instance.size(), s));
    lowest = std::min(lowest, h[s]);
  }
  double z = 0.0;
  for (auto& w : h) {
    w = std::exp(-beta * (w - lowest));
    z += w;
  }
  for (auto& w : h) w /= z;
  return h;
}

GibbsResidual gibbs_residual(const IsingInstance& instance, double beta, double tolerance,
                             std::size_t max_vertices) {
  const auto chain = build_chain(instance, beta, KernelKind::DigitalAnnealer, max_vertices);
  const auto pi = gibbs(instance, beta);
  const std::size_t states = chain.states();
  const std::size_t n = instance.size();

  GibbsResidual out;
  out.matrix_side.assign(states, 0.0);
  out.r_side.assign(states, 0.0);
  for (std::size_t from = 0; from < states; ++from) {
    const double* row = chain.matrix.data() + from * states;
    for (std::size_t to = 0; to < states; ++to) out.matrix_side[to] += pi[from] * row[to];
  }
  for (std::size_t s = 0; s < states; ++s) {
    out.matrix_side[s] -= pi[s];
    const auto sigma = SpinConfiguration::from_rank(n, s);
    const auto q = acceptance_probabilities(instance, sigma, beta);
    double sum = 0.0;
    for (Vertex x = 0; x < n; ++x) {
      const double backward = r_factor(instance, sigma.flipped(x), x, beta);
      const double forward = expected_reciprocal(q, x);
      sum += q[x] * (backward - forward);
    }
    out.r_side[s] = pi[s] * sum;
    out.max_abs_difference =
        std::max(out.max_abs_difference, std::fabs(out.matrix_side[s] - out.r_side[s]));
  }
  out.agree = out.max_abs_difference <= tolerance;
  return out;
}

RMonotonicityReport r_monotonicity_check(const IsingInstance& instance, double beta) {
  if (!instance.has_zero_fields())
    throw std::invalid_argument("r_monotonicity_check: instance has nonzero fields");
  for (const auto& c : instance.couplings())
    if (c.value < 0.0)
      throw std::invalid_argument("r_monotonicity_check: instance is not ferromagnetic");

  constexpr double kSlack = 1e-14;
  const auto up = SpinConfiguration::all_up(instance.size());
  RMonotonicityReport report;
  report.holds = true;
  for (Vertex x = 0; x < instance.size(); ++x) {
    RMonotonicityReport::Entry e;
    e.vertex = x;
    e.forward = r_factor(instance, up, x, beta);
    e.backward = r_factor(instance, up.flipped(x), x, beta);
    for (const auto& nb : instance.neighbors(x)) e.strict_expected = e.strict_expected || nb.coupling > 0.0;
    e.holds = e.strict_expected ? e.forward > e.backward : e.forward >= e.backward - kSlack;
    report.holds = report.holds && e.holds;
    report.entries.push_back(e);
  }
  return report;
}

double l1_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("l1_distance: length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d += std::fabs(p[i] - q[i]);
  return d;
}

}  // namespace daanneal
