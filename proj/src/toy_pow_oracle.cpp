#include "qbtc/toy_pow_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbtc/bigint.hpp"
#include "qbtc/rng.hpp"

namespace qbtc {

std::uint16_t toy_hash16(std::uint16_t input) {
  std::uint32_t x = input;
  x ^= x >> 7;
  x = (x * 0x2545u) & 0xFFFFu;
  x ^= x >> 9;
  x = (x * 0x9E35u) & 0xFFFFu;
  x ^= x >> 8;
  return static_cast<std::uint16_t>(x);
}

void ToyPuzzle::validate() const {
  if (space_bits < 1 || space_bits > 16) {
    throw ValidationError("toy puzzle space_bits must lie in [1, 16], got " + std::to_string(space_bits));
  }
  if (tau > 65536u) throw ValidationError("toy puzzle tau must not exceed 2^16");
}

std::uint32_t marked_count(const ToyPuzzle& puzzle) {
  puzzle.validate();
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < puzzle.size(); ++x) count += puzzle.is_marked(x) ? 1u : 0u;
  return count;
}

Statevector::Statevector(int space_bits) {
  if (space_bits < 1 || space_bits > 16) {
    throw ValidationError("statevector limited to 16 qubits, got " + std::to_string(space_bits));
  }
  const std::size_t n = std::size_t{1} << space_bits;
  amps_.assign(n, {1.0 / std::sqrt(static_cast<double>(n)), 0.0});
}

void Statevector::apply_oracle(const ToyPuzzle& puzzle) {
  for (std::uint32_t x = 0; x < amps_.size(); ++x) {
    if (puzzle.is_marked(x)) amps_[x] = -amps_[x];
  }
}

void Statevector::apply_diffusion() {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& a : amps_) sum += a;
  const std::complex<double> twice_mean = 2.0 * sum / static_cast<double>(amps_.size());
  for (auto& a : amps_) a = twice_mean - a;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double Statevector::marked_probability(const ToyPuzzle& puzzle) const {
  double p = 0.0;
  for (std::uint32_t x = 0; x < amps_.size(); ++x) {
    if (puzzle.is_marked(x)) p += std::norm(amps_[x]);
  }
  return p;
}

namespace {

Statevector evolve(const ToyPuzzle& puzzle, std::uint64_t k) {
  puzzle.validate();
  if (k > kMaxSimulatedIterations) {
    throw ValidationError("at most " + std::to_string(kMaxSimulatedIterations) + " simulated iterations");
  }
  Statevector state(puzzle.space_bits);
  for (std::uint64_t i = 0; i < k; ++i) state.grover_iteration(puzzle);
  return state;
}

}  // namespace

double grover_simulate(const ToyPuzzle& puzzle, std::uint64_t k) {
  return evolve(puzzle, k).marked_probability(puzzle);
}

std::uint16_t sample_measurement(const ToyPuzzle& puzzle, std::uint64_t k, std::uint64_t seed) {
  const Statevector state = evolve(puzzle, k);
  const auto& amps = state.amplitudes();
  double total = 0.0;
  for (const auto& a : amps) total += std::norm(a);

  Rng rng(seed);
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x) {
    cumulative += std::norm(amps[x]);
    if (u < cumulative) return static_cast<std::uint16_t>(x);
  }
  // Rounding can leave u just above the final partial sum; fall back to the
  // last state with nonzero weight.
  for (std::size_t x = amps.size(); x-- > 0;) {
    if (std::norm(amps[x]) > 0.0) return static_cast<std::uint16_t>(x);
  }
  return 0;
}

std::optional<std::uint32_t> tau_for_count(int space_bits, std::uint32_t count) {
  ToyPuzzle probe{space_bits, 0};
  probe.validate();
  std::vector<std::uint32_t> hashes(probe.size());
  for (std::uint32_t x = 0; x < probe.size(); ++x) hashes[x] = toy_hash16(static_cast<std::uint16_t>(x));
  std::sort(hashes.begin(), hashes.end());
  if (count == 0) return 0u;
  if (count > hashes.size()) return std::nullopt;
  // tau = h_(count) + 1 marks exactly `count` inputs unless the next hash ties.
  if (count < hashes.size() && hashes[count - 1] == hashes[count]) return std::nullopt;
  return hashes[count - 1] + 1;
}

}  // namespace qbtc
