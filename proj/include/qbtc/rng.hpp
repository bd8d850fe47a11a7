#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qbtc {

/// Deterministic stream used by every stochastic component.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++ standard.
/// Seeding: std::seed_seq over the 32-bit halves of (seed, stream), also fully
/// specified by the standard, so (seed, stream) pairs give independent and
/// portable sequences. Variates are derived here rather than through
/// std::*_distribution, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Exponential with the given rate, by inversion.
  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qbtc
