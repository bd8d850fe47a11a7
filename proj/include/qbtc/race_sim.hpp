#pragma once

#include <cstdint>
#include <vector>

#include "qbtc/bigint.hpp"
#include "qbtc/econ.hpp"

namespace qbtc {

struct RaceConfig {
  EconParams econ;
  double measure_at = 600.0;  ///< seconds of Grover evolution before measuring
  std::uint64_t horizon_blocks = 1000;  ///< blocks per replica
  std::uint64_t replicas = 1;
  std::uint64_t master_seed = 0;
  bool retarget = false;
  std::uint64_t retarget_interval_blocks = 2016;
  /// On a network block mid-run, measure at once and claim the block on success
  /// instead of discarding the run.
  bool measure_on_interrupt = false;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
  /// Record a per-block trace of replica 0.
  bool trace = false;

  void validate() const;
};

enum class Winner { Quantum, Network };

struct BlockRecord {
  std::uint64_t block_index = 0;
  Winner winner = Winner::Network;
  double interval_s = 0.0;
  double target_log2 = 0.0;
};

struct RaceStats {
  std::uint64_t quantum_blocks_won = 0;
  std::uint64_t network_blocks = 0;
  std::uint64_t attempts = 0;      ///< quantum runs started
  double quantum_win_rate = 0.0;   ///< quantum wins per attempt
  double win_rate_stderr = 0.0;    ///< sqrt(p (1 - p) / attempts)
  double revenue = 0.0;            ///< fiat
  double quantum_runtime_cost = 0.0;  ///< fiat
  double elapsed_s = 0.0;          ///< simulated time summed over replicas
  double mean_interval_s = 0.0;
  double final_target_log2 = 0.0;  ///< replica 0
  std::vector<std::uint64_t> replica_seeds;
  std::vector<BlockRecord> trace;  ///< replica 0, when requested

  std::uint64_t total_blocks() const { return quantum_blocks_won + network_blocks; }
};

/// Per-attempt probability that the quantum miner measures a valid block
/// before the network finds one: e^(-lambda t) sin^2(a t).
double analytic_win_rate(const EconParams& econ, double measure_at);

/// Win rate with measure-on-interrupt: adds the integral of
/// lambda e^(-lambda s) sin^2(a s) over [0, t].
double analytic_win_rate_measure_on_interrupt(const EconParams& econ, double measure_at);

/// Seed of replica i: the first output of Rng(master_seed, i).
std::uint64_t replica_seed(std::uint64_t master_seed, std::uint64_t replica);

RaceStats run_race(const RaceConfig& config);

/// target * observed / desired, clamped to [target / 4, 4 * target] and >= 1.
BigUint retarget_step(const BigUint& target, double observed_mean_interval, double desired = 600.0);

}  // namespace qbtc
