#include "daanneal/spin.hpp"

#include <stdexcept>

namespace daanneal {

SpinConfiguration::SpinConfiguration(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

SpinConfiguration SpinConfiguration::all_up(std::size_t n) {
  SpinConfiguration s(n);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    const std::size_t bits = (w + 1) * 64 <= n ? 64 : n - w * 64;
    s.words_[w] = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  }
  return s;
}

SpinConfiguration SpinConfiguration::from_rank(std::size_t n, std::uint64_t rank) {
  if (n > 64) throw std::invalid_argument("from_rank: more than 64 vertices");
  if (n < 64 && (rank >> n) != 0) throw std::out_of_range("from_rank: rank exceeds 2^n - 1");
  SpinConfiguration s(n);
  if (n > 0) s.words_[0] = rank;
  return s;
}

SpinConfiguration SpinConfiguration::from_spins(std::span<const int> spins) {
  SpinConfiguration s(spins.size());
  for (std::size_t i = 0; i < spins.size(); ++i) s.set(static_cast<Vertex>(i), spins[i]);
  return s;
}

void SpinConfiguration::set(Vertex x, int value) {
  if (value != 1 && value != -1) throw std::invalid_argument("spin value must be +1 or -1");
  const std::uint64_t mask = std::uint64_t{1} << (x & 63);
  if (value == 1)
    words_[x >> 6] |= mask;
  else
    words_[x >> 6] &= ~mask;
}

SpinConfiguration SpinConfiguration::negated() const {
  SpinConfiguration out = all_up(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] ^= words_[w];
  return out;
}

std::uint64_t SpinConfiguration::rank() const {
  if (n_ > 64) throw std::logic_error("rank: more than 64 vertices");
  return n_ == 0 ? 0 : words_[0];
}

std::vector<int> SpinConfiguration::to_spins() const {
  std::vector<int> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = spin(static_cast<Vertex>(i));
  return out;
}

}  // namespace daanneal
