#pragma once

#include <optional>
#include <variant>

#include "qbtc/bigint.hpp"
#include "qbtc/grover_math.hpp"

namespace qbtc {

/// Parameters of the mining-profitability model. Money is in abstract fiat units.
struct EconParams {
  BigUint target = 1;           ///< T: a hash wins when below this value
  int space_bits = 256;         ///< n: hashes range over [0, 2^n)
  double classical_rate = 0.0;  ///< r, hashes per second
  double quantum_rate = 0.0;    ///< r_q, Grover iterations per second
  double reward = 0.0;          ///< R, fiat per block
  double cost_rate = 0.0;       ///< C, fiat per second of quantum runtime
  double block_rate = 1.0 / 600.0;  ///< lambda, network blocks per second

  /// Throws ValidationError on negative rates/money, non-finite values or a bad target.
  void validate() const;
  TargetRatio ratio() const { return make_target_ratio(target, space_bits); }
  /// Phase velocity a = 2 r_q sqrt(T / 2^n); sin^2(a t) is the Grover success.
  double phase_rate() const;
  EconParams with_quantum_rate(double rq) const {
    EconParams p = *this;
    p.quantum_rate = rq;
    return p;
  }
};

enum class ClassicalMode { Linear, Exact };

/// LINEAR: min(1, T r t / 2^n). EXACT: 1 - (1 - T/2^n)^(r t).
double classical_success_prob(const EconParams& params, double t, ClassicalMode mode = ClassicalMode::Linear);

/// e^(-lambda t).
double survival_prob(double t, double block_rate);

/// R e^(-lambda t) sin^2(a t) - C t.
double quantum_profit(const EconParams& params, double t);

struct MeasurementPlan {
  double t_star = 0.0;  ///< seconds
  double profit = 0.0;  ///< fiat
};

/// Search window [0, t_max] with t_max = min(64 pi / a, 20 / lambda).
double measurement_horizon(const EconParams& params);

/// Best interior local maximum of quantum_profit on (0, t_max], possibly
/// negative. Found by a 64-points-per-lobe grid, then golden-section
/// refinement of every grid-local maximum. Nullopt when r_q = 0 or the
/// profit has no interior maximum (monotone decreasing window).
std::optional<MeasurementPlan> best_lobe(const EconParams& params);

/// Maximizer of quantum_profit over [0, t_max]; (0, 0) when no time is profitable.
MeasurementPlan optimal_measurement_time(const EconParams& params);

enum class BreakevenStatus { Ok, TriviallyProfitable, NeverProfitable };

struct BreakevenResult {
  BreakevenStatus status = BreakevenStatus::Ok;
  double quantum_rate = 0.0;  ///< r_q_min; 0 when trivially profitable
  double profit = 0.0;        ///< optimized profit at r_q_min
  double t_star = 0.0;
};

inline constexpr double kDefaultRateCeiling = 1e18;

/// Smallest r_q whose optimally timed profit is nonnegative, by bracket
/// doubling and bisection on r_q. C = 0 is trivially profitable.
BreakevenResult breakeven_quantum_rate(const EconParams& params, double ceiling = kDefaultRateCeiling);

/// 1 - (1 - p)^k, stable for tiny p.
double fleet_success(double p_single, const BigUint& machines);

struct ClassicalReference {
  double rate = 0.0;  ///< hashes per second
};
struct QuantumReference {
  double rate = 0.0;  ///< Grover iterations per second of the single reference machine
};
using FleetReference = std::variant<ClassicalReference, QuantumReference>;

struct FleetMatch {
  double window = 0.0;              ///< seconds, common comparison window
  double p_single = 0.0;            ///< one fleet machine over the window
  double p_reference = 0.0;         ///< reference over the window
  std::optional<BigUint> machines;  ///< nullopt when no finite fleet matches
};

/// Comparison window: the per-machine optimal measurement time when mining is
/// profitable, otherwise the mean block interval 1 / lambda.
double fleet_window(const EconParams& params, double rate_per_machine);

/// Smallest k with fleet_success(p_single, k) >= p_reference, both evaluated
/// over fleet_window(params, rate_per_machine). Classical references use the
/// LINEAR success form.
FleetMatch machines_to_match(const EconParams& params, double rate_per_machine, const FleetReference& reference);

/// sqrt(2^n / T).
double advantage_cap(const TargetRatio& ratio);

}  // namespace qbtc
