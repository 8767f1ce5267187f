#pragma once

#include <cmath>
#include <cstdint>

namespace meco {

/// Counter-based SplitMix64 stream. The algorithm is part of the scenario
/// file-format contract (see README): the state advances by the golden-ratio
/// increment and each output is the finalizer hash of the state, so any
/// implementation language reproduces the same draws from the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Finalizer hash (Stafford mix 13). Bijective on 64-bit words.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1ED558CCULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Seed of the i-th substream of `seed`. Used to split per-user and
  /// per-trial streams without consuming draws from the parent.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + kGamma * (index + 1));
  }

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform draw on the open interval (0, 1): midpoints of the 2^53 grid.
  double next_unit() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Exponential with the given mean; strictly positive by construction.
  double exponential(double mean) { return -mean * std::log1p(-next_unit()); }

  /// Index uniform over {0, ..., n-1}.
  std::size_t pick(std::size_t n) {
    const auto idx = static_cast<std::size_t>(next_unit() * static_cast<double>(n));
    return idx >= n ? n - 1 : idx;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

}  // namespace meco
