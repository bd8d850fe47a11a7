#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qbtc/race_sim.hpp"

using namespace qbtc;

namespace {

/// n = 16, T = 256, phase rate r_q / 8; returns the r_q reaching pi/2 at t.
double rate_for_quarter_turn(double t) { return 8.0 * (std::numbers::pi / 2) / t; }

RaceConfig quarter_turn_race(double lambda, std::uint64_t blocks, std::uint64_t replicas) {
  RaceConfig c;
  c.econ.target = 256;
  c.econ.space_bits = 16;
  c.econ.quantum_rate = rate_for_quarter_turn(600.0);
  c.econ.reward = 2.0;
  c.econ.cost_rate = 0.001;
  c.econ.block_rate = lambda;
  c.measure_at = 600.0;
  c.horizon_blocks = blocks;
  c.replicas = replicas;
  c.master_seed = 2024;
  return c;
}

bool same_stats(const RaceStats& a, const RaceStats& b) {
  return a.quantum_blocks_won == b.quantum_blocks_won && a.network_blocks == b.network_blocks &&
         a.attempts == b.attempts && a.quantum_win_rate == b.quantum_win_rate &&
         a.win_rate_stderr == b.win_rate_stderr && a.revenue == b.revenue &&
         a.quantum_runtime_cost == b.quantum_runtime_cost && a.elapsed_s == b.elapsed_s &&
         a.mean_interval_s == b.mean_interval_s && a.replica_seeds == b.replica_seeds;
}

/// Composite Simpson rule on [0, t] for lambda e^(-lambda s) sin^2(a s).
double interrupted_win_quadrature(double lambda, double a, double t) {
  const int n = 20000;
  const double h = t / n;
  auto f = [&](double s) { return lambda * std::exp(-lambda * s) * std::pow(std::sin(a * s), 2); };
  double sum = f(0.0) + f(t);
  for (int i = 1; i < n; ++i) sum += f(i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace

TEST_SUITE("race_sim") {
  TEST_CASE("analytic win rate examples") {
    RaceConfig c = quarter_turn_race(1.0 / 600, 1, 1);
    CHECK(analytic_win_rate(c.econ, 1e-9) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(analytic_win_rate(c.econ, 600.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    c.econ.block_rate = 0.0;
    CHECK(analytic_win_rate(c.econ, 600.0) == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("measure-on-interrupt closed form against quadrature") {
    for (double t : {100.0, 600.0, 2000.0}) {
      RaceConfig c = quarter_turn_race(1.0 / 600, 1, 1);
      c.econ.quantum_rate = 0.013;
      const double extra = analytic_win_rate_measure_on_interrupt(c.econ, t) - analytic_win_rate(c.econ, t);
      CHECK(extra == doctest::Approx(interrupted_win_quadrature(1.0 / 600, c.econ.phase_rate(), t)).epsilon(1e-9));
    }
  }

  TEST_CASE("zero quantum rate never wins") {
    RaceConfig c = quarter_turn_race(1.0 / 600, 500, 4);
    c.econ.quantum_rate = 0.0;
    const RaceStats s = run_race(c);
    CHECK(s.quantum_blocks_won == 0);
    CHECK(s.network_blocks == 2000);
    CHECK(s.attempts >= 2000);
  }

  TEST_CASE("vanishing network rate hands every block to the quantum miner") {
    const RaceStats s = run_race(quarter_turn_race(1e-12, 300, 3));
    CHECK(s.quantum_blocks_won == 900);
    CHECK(s.network_blocks == 0);
  }

  TEST_CASE("win rate agrees with the closed form within 4 sigma") {
    const RaceConfig c = quarter_turn_race(1.0 / 600, 2000, 50);
    const RaceStats s = run_race(c);
    REQUIRE(s.attempts >= 100000);
    CHECK(std::abs(s.quantum_win_rate - std::exp(-1.0)) <= 4.0 * s.win_rate_stderr);
    CHECK(s.win_rate_stderr == doctest::Approx(std::sqrt(s.quantum_win_rate * (1 - s.quantum_win_rate) / s.attempts)));
    CHECK(s.total_blocks() == 100000);
    CHECK(s.revenue == doctest::Approx(c.econ.reward * s.quantum_blocks_won));
    CHECK(s.quantum_runtime_cost == doctest::Approx(c.econ.cost_rate * s.elapsed_s));
  }

  TEST_CASE("measure-on-interrupt win rate agrees with its closed form") {
    RaceConfig c = quarter_turn_race(1.0 / 600, 2000, 50);
    c.measure_on_interrupt = true;
    const RaceStats s = run_race(c);
    const double expect = analytic_win_rate_measure_on_interrupt(c.econ, c.measure_at);
    CHECK(std::abs(s.quantum_win_rate - expect) <= 4.0 * s.win_rate_stderr);
  }

  TEST_CASE("deterministic across reruns and thread counts") {
    RaceConfig c = quarter_turn_race(1.0 / 600, 300, 16);
    c.threads = 1;
    const RaceStats one = run_race(c);
    const RaceStats again = run_race(c);
    c.threads = 4;
    const RaceStats four = run_race(c);
    c.threads = 0;
    const RaceStats all = run_race(c);
    CHECK(same_stats(one, again));
    CHECK(same_stats(one, four));
    CHECK(same_stats(one, all));

    c.master_seed += 1;
    CHECK_FALSE(same_stats(one, run_race(c)));
  }

  TEST_CASE("replica seeds are distinct") {
    for (std::uint64_t i = 0; i < 100; ++i) {
      for (std::uint64_t j = i + 1; j < 100; ++j) CHECK(replica_seed(9, i) != replica_seed(9, j));
    }
  }

  TEST_CASE("trace covers every block of replica 0") {
    RaceConfig c = quarter_turn_race(1.0 / 600, 50, 2);
    c.trace = true;
    const RaceStats s = run_race(c);
    REQUIRE(s.trace.size() == 50);
    for (std::size_t i = 0; i < s.trace.size(); ++i) {
      CHECK(s.trace[i].block_index == i);
      CHECK(s.trace[i].interval_s > 0.0);
    }
  }

  TEST_CASE("invalid configurations") {
    RaceConfig c = quarter_turn_race(0.0, 10, 1);
    CHECK_THROWS_AS(run_race(c), ValidationError);
    c = quarter_turn_race(1.0 / 600, 0, 1);
    CHECK_THROWS_AS(run_race(c), ValidationError);
    c = quarter_turn_race(1.0 / 600, 10, 0);
    CHECK_THROWS_AS(run_race(c), ValidationError);
    c = quarter_turn_race(1.0 / 600, 10, 1);
    c.measure_at = 0.0;
    CHECK_THROWS_AS(run_race(c), ValidationError);
  }

  TEST_CASE("retarget step") {
    const BigUint t = BigUint(1) << 200;
    CHECK(retarget_step(t, 600.0) == t);
    CHECK(retarget_step(t, 75.0) == t / 4);
    CHECK(retarget_step(t, 1200.0) == 2 * t);
    CHECK(retarget_step(t, 6000.0) == 4 * t);
    CHECK(retarget_step(BigUint(1000), 300.0) == 500);
    CHECK(retarget_step(BigUint(1), 1.0) == 1);
    CHECK_THROWS_AS(retarget_step(t, 0.0), ValidationError);
  }

  TEST_CASE("retargeting pulls the block interval back to the design value") {
    RaceConfig c;
    c.econ.space_bits = 32;
    c.econ.target = BigUint(1) << 24;  // sqrt ratio 1/16
    c.econ.quantum_rate = 8.0 * std::numbers::pi / 600.0;  // phase pi/2 at 300 s
    c.econ.block_rate = 1.0 / 600;
    c.measure_at = 300.0;
    c.horizon_blocks = 2016 * 20;
    c.replicas = 1;
    c.master_seed = 7;
    c.retarget = true;
    c.trace = true;
    const RaceStats s = run_race(c);

    double early = 0.0;
    for (std::size_t i = 0; i < 2016; ++i) early += s.trace[i].interval_s;
    early /= 2016;
    CHECK(early < 0.8 * 600.0);

    double late = 0.0;
    for (std::size_t i = 2016 * 10; i < s.trace.size(); ++i) late += s.trace[i].interval_s;
    late /= static_cast<double>(s.trace.size() - 2016 * 10);
    CHECK(std::abs(late - 600.0) <= 0.05 * 600.0);
    CHECK(s.final_target_log2 < 24.0);
  }
}
