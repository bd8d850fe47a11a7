#pragma once

#include "qbtc/bigint.hpp"

namespace qbtc {

/// A search over N = 2^space_bits items with marked_count solutions, run for
/// `iterations` Grover iterations.
struct GroverInstance {
  int space_bits = 1;
  BigUint marked_count = 0;
  BigUint iterations = 0;

  /// Throws ValidationError unless 1 <= space_bits <= 256, 0 <= M <= 2^n, k >= 0.
  void validate() const;
};

/// Target T over a 2^n search space, stored alongside log2(T / 2^n) so the
/// ratio itself is never formed as a float.
struct TargetRatio {
  BigUint target = 1;
  int space_bits = 0;
  double log2_ratio = 0.0;

  /// T / 2^n (may underflow to a subnormal or zero for extreme ratios).
  double ratio() const;
  /// sqrt(T / 2^n), formed in the log domain.
  double sqrt_ratio() const;
};

/// Ratios below this use the series asin(sqrt(x)) ~ sqrt(x) * (1 + x / 6).
inline constexpr double kSmallAngleRatio = 1e-12;

/// Grover angle asin(sqrt(M / N)) for N = 2^space_bits.
double grover_angle(int space_bits, const BigUint& marked_count);

/// Exact success probability sin^2((2k + 1) theta). Zero when M = 0.
double exact_success_prob(const GroverInstance& inst);

/// Small-angle form sin^2(2 * r_q * t * sqrt(T / 2^n)); exactly 0 at t = 0.
double paper_success_prob(double quantum_rate, double t, const TargetRatio& ratio);

/// floor(pi / (4 theta)). Equal-probability ties go to the smaller k.
BigUint optimal_iterations(int space_bits, const BigUint& marked_count);

/// Validates 0 < target <= 2^space_bits and computes log2(target) - space_bits.
TargetRatio make_target_ratio(const BigUint& target, int space_bits);

}  // namespace qbtc
