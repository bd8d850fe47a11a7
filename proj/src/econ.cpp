#include "qbtc/econ.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qbtc/golden_section.hpp"

namespace qbtc {
namespace {

void require_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) throw ValidationError(std::string(name) + " must be finite and nonnegative");
}

double sin_squared(double phase) {
  const double s = std::sin(phase);
  return s * s;
}

constexpr int kPointsPerLobe = 64;
constexpr int kMaxLobes = 64;
constexpr double kSurvivalCutoff = 20.0;  // e^-20 ~ 2e-9

}  // namespace

void EconParams::validate() const {
  require_nonnegative(classical_rate, "classical_rate");
  require_nonnegative(quantum_rate, "quantum_rate");
  require_nonnegative(reward, "reward");
  require_nonnegative(cost_rate, "cost_rate");
  require_nonnegative(block_rate, "block_rate");
  (void)ratio();
}

double EconParams::phase_rate() const { return 2.0 * quantum_rate * ratio().sqrt_ratio(); }

double classical_success_prob(const EconParams& params, double t, ClassicalMode mode) {
  require_nonnegative(t, "t");
  const TargetRatio ratio = params.ratio();
  const double guesses = params.classical_rate * t;
  if (guesses == 0.0) return 0.0;
  const double linear = std::min(1.0, guesses * ratio.ratio());
  if (mode == ClassicalMode::Linear) return linear;
  if (ratio.log2_ratio == 0.0) return 1.0;
  const double exact = -std::expm1(guesses * std::log1p(-ratio.ratio()));
  // 1 - (1-p)^x <= p x holds exactly; keep rounding from inverting it.
  return std::min(exact, linear);
}

double survival_prob(double t, double block_rate) {
  require_nonnegative(t, "t");
  require_nonnegative(block_rate, "block_rate");
  return std::exp(-block_rate * t);
}

double quantum_profit(const EconParams& params, double t) {
  require_nonnegative(t, "t");
  if (t == 0.0) return 0.0;
  const double a = params.phase_rate();
  return params.reward * std::exp(-params.block_rate * t) * sin_squared(a * t) - params.cost_rate * t;
}

double measurement_horizon(const EconParams& params) {
  const double a = params.phase_rate();
  double horizon = std::numeric_limits<double>::infinity();
  if (a > 0.0) horizon = kMaxLobes * std::numbers::pi / a;
  if (params.block_rate > 0.0) horizon = std::min(horizon, kSurvivalCutoff / params.block_rate);
  return horizon;
}

std::optional<MeasurementPlan> best_lobe(const EconParams& params) {
  params.validate();
  const double a = params.phase_rate();
  if (a <= 0.0) return std::nullopt;
  const double t_max = measurement_horizon(params);
  const double lobe = std::numbers::pi / a;

  const auto lobes = static_cast<long>(std::ceil(t_max / lobe));
  const long points = std::max<long>(kPointsPerLobe, kPointsPerLobe * lobes);
  const double step = t_max / static_cast<double>(points);

  auto profit = [&](double t) { return quantum_profit(params, t); };
  std::vector<double> values(static_cast<std::size_t>(points) + 1);
  for (long i = 0; i <= points; ++i) {
    values[static_cast<std::size_t>(i)] = profit(i == points ? t_max : static_cast<double>(i) * step);
  }

  std::optional<MeasurementPlan> best;
  for (long i = 1; i <= points; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const bool rises = values[u] >= values[u - 1];
    const bool falls = i == points || values[u] >= values[u + 1];
    if (!rises || !falls) continue;

    const double lo = static_cast<double>(i - 1) * step;
    const double hi = i == points ? t_max : std::min(t_max, static_cast<double>(i + 1) * step);
    auto [t, v] = golden_section_max(profit, lo, hi, 1e-12);
    if (values[u] > v) {
      t = i == points ? t_max : static_cast<double>(i) * step;
      v = values[u];
    }
    if (!best || v > best->profit) best = MeasurementPlan{t, v};
  }
  return best;
}

MeasurementPlan optimal_measurement_time(const EconParams& params) {
  const auto lobe = best_lobe(params);
  if (!lobe || lobe->profit <= 0.0) return {};
  return *lobe;
}

BreakevenResult breakeven_quantum_rate(const EconParams& params, double ceiling) {
  params.validate();
  if (params.cost_rate == 0.0) return {BreakevenStatus::TriviallyProfitable, 0.0, 0.0, 0.0};
  if (params.reward == 0.0) return {BreakevenStatus::NeverProfitable, 0.0, 0.0, 0.0};

  auto peak = [&](double rq) {
    const auto lobe = best_lobe(params.with_quantum_rate(rq));
    return lobe ? *lobe : MeasurementPlan{0.0, -std::numeric_limits<double>::infinity()};
  };

  // Scale where the phase turns at the block rate (or at C/R without decay).
  const double sqrt_ratio = params.ratio().sqrt_ratio();
  const double turn_rate = params.block_rate > 0.0 ? params.block_rate : params.cost_rate / params.reward;
  double hi = std::min(ceiling, turn_rate / (2.0 * sqrt_ratio));
  if (!(hi > 0.0) || !std::isfinite(hi)) hi = std::min(ceiling, 1.0);

  MeasurementPlan at_hi = peak(hi);
  double lo = 0.0;
  if (at_hi.profit >= 0.0) {
    lo = hi / 2.0;
    for (int i = 0; i < 4000 && peak(lo).profit >= 0.0; ++i) {
      hi = lo;
      lo /= 2.0;
    }
    at_hi = peak(hi);
  } else {
    while (at_hi.profit < 0.0) {
      if (hi >= ceiling) return {BreakevenStatus::NeverProfitable, 0.0, 0.0, 0.0};
      lo = hi;
      hi = std::min(ceiling, 2.0 * hi);
      at_hi = peak(hi);
    }
  }

  // Profit is nondecreasing in r_q, so the sign change is unique.
  while (hi - lo > 1e-8 * hi) {
    const double mid = 0.5 * (lo + hi);
    const MeasurementPlan m = peak(mid);
    if (m.profit >= 0.0) {
      hi = mid;
      at_hi = m;
    } else {
      lo = mid;
    }
  }
  return {BreakevenStatus::Ok, hi, at_hi.profit, at_hi.t_star};
}

double fleet_success(double p_single, const BigUint& machines) {
  if (!(p_single >= 0.0 && p_single <= 1.0)) throw ValidationError("p_single must lie in [0, 1]");
  if (machines < 0) throw ValidationError("machine count must be nonnegative");
  if (machines == 0 || p_single == 0.0) return 0.0;
  if (machines == 1 || p_single == 1.0) return p_single;
  return -std::expm1(to_double(machines) * std::log1p(-p_single));
}

double fleet_window(const EconParams& params, double rate_per_machine) {
  const MeasurementPlan plan = optimal_measurement_time(params.with_quantum_rate(rate_per_machine));
  if (plan.t_star > 0.0) return plan.t_star;
  if (params.block_rate > 0.0) return 1.0 / params.block_rate;
  throw ValidationError("no comparison window: mining unprofitable and block_rate is zero");
}

FleetMatch machines_to_match(const EconParams& params, double rate_per_machine, const FleetReference& reference) {
  params.validate();
  if (!(rate_per_machine > 0.0) || !std::isfinite(rate_per_machine)) {
    throw ValidationError("per-machine rate must be positive");
  }
  FleetMatch out;
  out.window = fleet_window(params, rate_per_machine);
  const TargetRatio ratio = params.ratio();
  out.p_single = paper_success_prob(rate_per_machine, out.window, ratio);
  out.p_reference = std::visit(
      [&](const auto& ref) {
        require_nonnegative(ref.rate, "reference rate");
        using Ref = std::decay_t<decltype(ref)>;
        if constexpr (std::is_same_v<Ref, ClassicalReference>) {
          EconParams classical = params;
          classical.classical_rate = ref.rate;
          return classical_success_prob(classical, out.window, ClassicalMode::Linear);
        } else {
          return paper_success_prob(ref.rate, out.window, ratio);
        }
      },
      reference);

  const double p = out.p_single;
  const double target = out.p_reference;
  if (target <= 0.0) {
    out.machines = BigUint(0);
    return out;
  }
  if (p >= 1.0) {
    out.machines = BigUint(1);
    return out;
  }
  if (p <= 0.0 || target >= 1.0) return out;

  // Matches within a relative 1e-12 count as reaching the reference.
  const double goal = target * (1.0 - 1e-12);
  const double estimate = std::ceil(std::log1p(-goal) / std::log1p(-p));
  BigUint k(std::max(1.0, estimate));
  if (estimate < 0x1.0p53) {
    while (k > 1 && fleet_success(p, k - 1) >= goal) --k;
    while (fleet_success(p, k) < goal) ++k;
  }
  out.machines = k;
  return out;
}

double advantage_cap(const TargetRatio& ratio) { return std::exp2(-0.5 * ratio.log2_ratio); }

}  // namespace qbtc
