#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbtc/bigint.hpp"

namespace qbtc {

/// Resources of a quantum key-recovery attack on a 256-bit ECDSA key.
struct AttackProfile {
  std::string name;
  std::string source_label;
  std::uint64_t qubits = 0;
  BigUint serial_gates = 1;
  /// Clock rate and window the source pairs with these counts, if it states any.
  std::optional<Rational> claimed_clock_hz;
  std::optional<Rational> claimed_window_s;

  void validate() const;
};

/// Proos-Zalka: ~1500 qubits, 6e9 one-qubit additions at 9 gates each; quoted
/// as needing ~660 MHz to finish within an hour.
AttackProfile proos_zalka_profile();
/// Roetteler et al.: 2330 qubits, 1.26e11 Toffoli gates (other gates free);
/// quoted as needing ~350 MHz to finish within an hour.
AttackProfile roetteler_profile();
std::vector<AttackProfile> builtin_profiles();
/// Case-insensitive lookup; '-' and '_' are interchangeable.
std::optional<AttackProfile> find_profile(std::string_view name);

BigUint total_gates(const BigUint& additions, const BigUint& gates_per_addition);

/// gates / window, exact.
Rational required_clock(const BigUint& gates, const Rational& window_s);

/// gates / clock, exact.
Rational implied_window(const BigUint& gates, const Rational& clock_hz);

enum class SurvivalMode {
  Exponential,   ///< e^(-lambda t)
  FixedDeadline  ///< 1 when t < deadline, else 0
};

/// Probability the pending transaction is still unconfirmed when the key falls.
double attack_survival(double break_time_s, double block_rate, SurvivalMode mode = SurvivalMode::Exponential,
                       double deadline_s = 600.0);

struct ClaimAudit {
  bool consistent = true;
  Rational derived_clock_hz;   ///< serial_gates / claimed window
  Rational implied_window_s;   ///< serial_gates / claimed clock
  std::string annotation;      ///< empty when consistent
};

/// Checks the profile's claimed clock against its own gate count and window.
/// Nullopt when the profile makes no claim.
std::optional<ClaimAudit> audit_claim(const AttackProfile& profile);

}  // namespace qbtc
