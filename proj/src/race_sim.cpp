#include "qbtc/race_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "qbtc/rng.hpp"

namespace qbtc {
namespace {

double sin_squared(double phase) {
  const double s = std::sin(phase);
  return s * s;
}

struct ReplicaResult {
  std::uint64_t quantum = 0;
  std::uint64_t network = 0;
  std::uint64_t attempts = 0;
  double elapsed_s = 0.0;
  double final_target_log2 = 0.0;
  std::vector<BlockRecord> trace;
};

/// Network hash power is fixed, so its block rate scales with the target.
struct Difficulty {
  BigUint target;
  double target_log2 = 0.0;
  double network_rate = 0.0;
  double phase_rate = 0.0;
};

Difficulty make_difficulty(const RaceConfig& cfg, const BigUint& target, double initial_target_log2) {
  Difficulty d;
  d.target = target;
  d.target_log2 = log2_big(target);
  d.network_rate = cfg.econ.block_rate * std::exp2(d.target_log2 - initial_target_log2);
  d.phase_rate = 2.0 * cfg.econ.quantum_rate * std::exp2(0.5 * (d.target_log2 - cfg.econ.space_bits));
  return d;
}

ReplicaResult simulate_replica(const RaceConfig& cfg, std::uint64_t seed, bool keep_trace) {
  Rng rng(seed);
  ReplicaResult out;
  const double initial_log2 = log2_big(cfg.econ.target);
  const double desired = 1.0 / cfg.econ.block_rate;
  const BigUint target_cap = pow2(static_cast<unsigned>(cfg.econ.space_bits));
  Difficulty diff = make_difficulty(cfg, cfg.econ.target, initial_log2);
  const double t_meas = cfg.measure_at;
  double period_time = 0.0;

  for (std::uint64_t block = 0; block < cfg.horizon_blocks; ++block) {
    const double p_full = sin_squared(diff.phase_rate * t_meas);
    double interval = 0.0;
    Winner winner = Winner::Network;

    if (p_full == 0.0 && (diff.phase_rate == 0.0 || !cfg.measure_on_interrupt)) {
      // Measurements never succeed: every full run fails and the network
      // block lands in the run after floor(delta / t) failed ones.
      const double delta = rng.exponential(diff.network_rate);
      interval = delta;
      out.attempts += static_cast<std::uint64_t>(std::floor(delta / t_meas)) + 1;
    } else {
      for (;;) {
        ++out.attempts;
        const double delta = rng.exponential(diff.network_rate);
        if (delta < t_meas) {
          interval += delta;
          if (cfg.measure_on_interrupt && rng.bernoulli(sin_squared(diff.phase_rate * delta))) {
            winner = Winner::Quantum;
          }
          break;
        }
        interval += t_meas;
        if (rng.bernoulli(p_full)) {
          winner = Winner::Quantum;
          break;
        }
      }
    }

    (winner == Winner::Quantum ? out.quantum : out.network) += 1;
    out.elapsed_s += interval;
    period_time += interval;
    if (keep_trace) out.trace.push_back({block, winner, interval, diff.target_log2});

    if (cfg.retarget && (block + 1) % cfg.retarget_interval_blocks == 0) {
      const double mean = period_time / static_cast<double>(cfg.retarget_interval_blocks);
      BigUint next = retarget_step(diff.target, mean, desired);
      if (next > target_cap) next = target_cap;
      diff = make_difficulty(cfg, next, initial_log2);
      period_time = 0.0;
    }
  }
  out.final_target_log2 = diff.target_log2;
  return out;
}

}  // namespace

void RaceConfig::validate() const {
  econ.validate();
  if (!(econ.block_rate > 0.0)) throw ValidationError("race simulation needs a positive block_rate");
  if (!(measure_at > 0.0) || !std::isfinite(measure_at)) throw ValidationError("measure_at must be positive");
  if (horizon_blocks < 1) throw ValidationError("horizon_blocks must be at least 1");
  if (replicas < 1) throw ValidationError("replicas must be at least 1");
  if (retarget && retarget_interval_blocks < 1) throw ValidationError("retarget_interval_blocks must be at least 1");
}

double analytic_win_rate(const EconParams& econ, double measure_at) {
  if (!(measure_at > 0.0)) throw ValidationError("measure_at must be positive");
  return std::exp(-econ.block_rate * measure_at) * sin_squared(econ.phase_rate() * measure_at);
}

double analytic_win_rate_measure_on_interrupt(const EconParams& econ, double measure_at) {
  const double lambda = econ.block_rate;
  const double a = econ.phase_rate();
  const double t = measure_at;
  const double decay = std::exp(-lambda * t);
  // int_0^t lambda e^(-lambda s) sin^2(a s) ds with sin^2 = (1 - cos 2as) / 2.
  const double cos_part = lambda == 0.0 && a == 0.0
                              ? 0.0
                              : 0.5 * lambda *
                                    (decay * (2.0 * a * std::sin(2.0 * a * t) - lambda * std::cos(2.0 * a * t)) + lambda) /
                                    (lambda * lambda + 4.0 * a * a);
  const double interrupted = 0.5 * (1.0 - decay) - cos_part;
  return analytic_win_rate(econ, measure_at) + interrupted;
}

std::uint64_t replica_seed(std::uint64_t master_seed, std::uint64_t replica) {
  return Rng(master_seed, replica).next_u64();
}

RaceStats run_race(const RaceConfig& config) {
  config.validate();
  RaceStats stats;
  stats.replica_seeds.resize(config.replicas);
  for (std::uint64_t i = 0; i < config.replicas; ++i) stats.replica_seeds[i] = replica_seed(config.master_seed, i);

  std::vector<ReplicaResult> results(config.replicas);
  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.replicas));

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < config.replicas;) {
      results[i] = simulate_replica(config, stats.replica_seeds[i], config.trace && i == 0);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Aggregate in replica order so floating sums do not depend on scheduling.
  for (const auto& r : results) {
    stats.quantum_blocks_won += r.quantum;
    stats.network_blocks += r.network;
    stats.attempts += r.attempts;
    stats.elapsed_s += r.elapsed_s;
  }
  const double attempts = static_cast<double>(stats.attempts);
  stats.quantum_win_rate = static_cast<double>(stats.quantum_blocks_won) / attempts;
  stats.win_rate_stderr = std::sqrt(stats.quantum_win_rate * (1.0 - stats.quantum_win_rate) / attempts);
  stats.revenue = config.econ.reward * static_cast<double>(stats.quantum_blocks_won);
  stats.quantum_runtime_cost = config.econ.cost_rate * stats.elapsed_s;
  stats.mean_interval_s = stats.elapsed_s / static_cast<double>(stats.total_blocks());
  stats.final_target_log2 = results.front().final_target_log2;
  stats.trace = std::move(results.front().trace);
  return stats;
}

BigUint retarget_step(const BigUint& target, double observed_mean_interval, double desired) {
  if (!(observed_mean_interval > 0.0) || !std::isfinite(observed_mean_interval)) {
    throw ValidationError("observed mean interval must be positive");
  }
  if (!(desired > 0.0) || !std::isfinite(desired)) throw ValidationError("desired interval must be positive");
  if (target <= 0) throw ValidationError("target must be positive");

  const Rational scaled = Rational(target) * to_rational(observed_mean_interval) / to_rational(desired);
  BigUint next = numerator(scaled) / denominator(scaled);
  const BigUint floor_target = target / 4;
  const BigUint ceil_target = target * 4;
  next = std::clamp(next, floor_target, ceil_target);
  return next < 1 ? BigUint(1) : next;
}

}  // namespace qbtc
