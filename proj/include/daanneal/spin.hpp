#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace daanneal {

using Vertex = std::uint32_t;

/// Assignment of +/-1 to each of n vertices, bit-packed (bit = 1 <=> spin = +1).
///
/// For n <= 64 the packed word doubles as the configuration's state index:
/// bit i of rank() is (sigma_i + 1) / 2. All exact and landscape routines key
/// their state spaces on this encoding.
class SpinConfiguration {
 public:
  SpinConfiguration() = default;

  /// All spins -1.
  explicit SpinConfiguration(std::size_t n);

  static SpinConfiguration all_up(std::size_t n);
  static SpinConfiguration from_rank(std::size_t n, std::uint64_t rank);
  static SpinConfiguration from_spins(std::span<const int> spins);

  std::size_t size() const { return n_; }

  int spin(Vertex x) const {
    return ((words_[x >> 6] >> (x & 63)) & 1u) ? 1 : -1;
  }
  bool is_up(Vertex x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }

  void set(Vertex x, int value);
  void flip(Vertex x) { words_[x >> 6] ^= std::uint64_t{1} << (x & 63); }

  SpinConfiguration flipped(Vertex x) const {
    SpinConfiguration out = *this;
    out.flip(x);
    return out;
  }

  /// Global spin reversal.
  SpinConfiguration negated() const;

  /// State index; requires size() <= 64.
  std::uint64_t rank() const;

  std::vector<int> to_spins() const;

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace daanneal
