#include "qbtc/grover_math.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qbtc {
namespace {

void check_space_bits(int space_bits) {
  if (space_bits < 1 || space_bits > 256) {
    throw ValidationError("space_bits must lie in [1, 256], got " + std::to_string(space_bits));
  }
}

double sin_squared(double phase) {
  const double s = std::sin(phase);
  return s * s;
}

}  // namespace

void GroverInstance::validate() const {
  check_space_bits(space_bits);
  if (marked_count < 0) throw ValidationError("marked_count must be nonnegative");
  if (marked_count > pow2(static_cast<unsigned>(space_bits))) {
    throw ValidationError("marked_count exceeds the search space size");
  }
  if (iterations < 0) throw ValidationError("iterations must be nonnegative");
}

double TargetRatio::ratio() const { return std::exp2(log2_ratio); }

double TargetRatio::sqrt_ratio() const { return std::exp2(0.5 * log2_ratio); }

double grover_angle(int space_bits, const BigUint& marked_count) {
  check_space_bits(space_bits);
  if (marked_count <= 0) return 0.0;
  const BigUint space = pow2(static_cast<unsigned>(space_bits));
  if (marked_count > space) throw ValidationError("marked_count exceeds the search space size");
  if (marked_count == space) return std::numbers::pi / 2;

  const double fraction = std::exp2(log2_big(marked_count) - space_bits);
  if (fraction < kSmallAngleRatio) {
    return std::sqrt(fraction) * (1.0 + fraction / 6.0);
  }
  return std::asin(std::sqrt(fraction));
}

double exact_success_prob(const GroverInstance& inst) {
  inst.validate();
  if (inst.marked_count == 0) return 0.0;
  if (inst.marked_count == pow2(static_cast<unsigned>(inst.space_bits))) return 1.0;
  const double theta = grover_angle(inst.space_bits, inst.marked_count);
  const double turns = 2.0 * to_double(inst.iterations) + 1.0;
  return sin_squared(turns * theta);
}

double paper_success_prob(double quantum_rate, double t, const TargetRatio& ratio) {
  if (!(quantum_rate >= 0.0) || !(t >= 0.0)) {
    throw ValidationError("quantum rate and time must be nonnegative");
  }
  if (t == 0.0 || quantum_rate == 0.0) return 0.0;
  return sin_squared(2.0 * quantum_rate * t * ratio.sqrt_ratio());
}

BigUint optimal_iterations(int space_bits, const BigUint& marked_count) {
  check_space_bits(space_bits);
  if (marked_count <= 0) throw ValidationError("optimal_iterations needs at least one marked item");
  const double theta = grover_angle(space_bits, marked_count);
  const double x = std::numbers::pi / (4.0 * theta);
  // Integral x puts pi/2 midway between k = x - 1 and k = x, so both give the
  // same probability; take the smaller.
  const double nearest = std::round(x);
  if (nearest >= 1.0 && std::abs(x - nearest) <= 1e-9 * nearest) return BigUint(nearest - 1.0);
  return BigUint(std::floor(x));
}

TargetRatio make_target_ratio(const BigUint& target, int space_bits) {
  check_space_bits(space_bits);
  if (target <= 0) throw ValidationError("target must be positive");
  if (target > pow2(static_cast<unsigned>(space_bits))) {
    throw ValidationError("target exceeds 2^" + std::to_string(space_bits));
  }
  TargetRatio r;
  r.target = target;
  r.space_bits = space_bits;
  r.log2_ratio = log2_big(target) - space_bits;
  if (r.log2_ratio > 0.0) r.log2_ratio = 0.0;
  return r;
}

}  // namespace qbtc
