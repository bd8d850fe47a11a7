#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace qbtc {

enum class ToyHash { Toy16 };

/// Fixed 16-bit mixing function standing in for SHA-256:
/// xorshift and odd-constant multiplies mod 2^16, no additive constants.
std::uint16_t toy_hash16(std::uint16_t x);

/// Preimage search over x in [0, 2^space_bits) for toy_hash16(x) < tau.
struct ToyPuzzle {
  int space_bits = 16;
  std::uint32_t tau = 0;
  ToyHash hash = ToyHash::Toy16;

  void validate() const;
  bool is_marked(std::uint32_t x) const { return toy_hash16(static_cast<std::uint16_t>(x)) < tau; }
  std::uint32_t size() const { return 1u << space_bits; }
};

/// Brute-force count of marked inputs.
std::uint32_t marked_count(const ToyPuzzle& puzzle);

/// Dense statevector over the puzzle's search space.
class Statevector {
 public:
  /// Uniform superposition over 2^space_bits basis states.
  explicit Statevector(int space_bits);

  /// Phase-flip every marked amplitude.
  void apply_oracle(const ToyPuzzle& puzzle);
  /// Inversion about the mean: a <- 2 * mean - a.
  void apply_diffusion();
  void grover_iteration(const ToyPuzzle& puzzle) {
    apply_oracle(puzzle);
    apply_diffusion();
  }

  double norm() const;
  double marked_probability(const ToyPuzzle& puzzle) const;
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

 private:
  std::vector<std::complex<double>> amps_;
};

inline constexpr std::uint64_t kMaxSimulatedIterations = 10000;

/// Probability mass on the marked set after k Grover iterations.
double grover_simulate(const ToyPuzzle& puzzle, std::uint64_t k);

/// Measures the post-Grover state once, using Rng(seed).
std::uint16_t sample_measurement(const ToyPuzzle& puzzle, std::uint64_t k, std::uint64_t seed);

/// Smallest tau for which exactly `count` inputs are marked, if one exists.
std::optional<std::uint32_t> tau_for_count(int space_bits, std::uint32_t count);

}  // namespace qbtc
