#include "qbtc/attack_calc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace qbtc {

void AttackProfile::validate() const {
  if (qubits == 0) throw ValidationError("attack profile needs a positive qubit count");
  if (serial_gates < 1) throw ValidationError("attack profile needs at least one serial gate");
}

AttackProfile proos_zalka_profile() {
  AttackProfile p;
  p.name = "proos-zalka";
  p.source_label = "Proos & Zalka (2003), Shor ECDLP, 6e9 one-qubit additions x 9 gates";
  p.qubits = 1500;
  p.serial_gates = total_gates(BigUint(6'000'000'000ULL), BigUint(9));
  p.claimed_clock_hz = Rational(660'000'000);
  p.claimed_window_s = Rational(3600);
  return p;
}

AttackProfile roetteler_profile() {
  AttackProfile p;
  p.name = "roetteler";
  p.source_label = "Roetteler, Naehrig, Svore & Lauter (2017), Toffoli count only";
  p.qubits = 2330;
  p.serial_gates = total_gates(BigUint(126'000'000'000ULL), BigUint(1));
  p.claimed_clock_hz = Rational(350'000'000);
  p.claimed_window_s = Rational(3600);
  return p;
}

std::vector<AttackProfile> builtin_profiles() { return {proos_zalka_profile(), roetteler_profile()}; }

std::optional<AttackProfile> find_profile(std::string_view name) {
  auto normalize = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const std::string key = normalize(name);
  for (auto& p : builtin_profiles()) {
    if (p.name == key) return p;
  }
  return std::nullopt;
}

BigUint total_gates(const BigUint& additions, const BigUint& gates_per_addition) {
  if (additions < 1 || gates_per_addition < 1) throw ValidationError("gate counts must be positive");
  return additions * gates_per_addition;
}

Rational required_clock(const BigUint& gates, const Rational& window_s) {
  if (window_s <= 0) throw ValidationError("attack window must be positive");
  if (gates < 1) throw ValidationError("gate count must be positive");
  return Rational(gates) / window_s;
}

Rational implied_window(const BigUint& gates, const Rational& clock_hz) {
  if (clock_hz <= 0) throw ValidationError("clock rate must be positive");
  if (gates < 1) throw ValidationError("gate count must be positive");
  return Rational(gates) / clock_hz;
}

double attack_survival(double break_time_s, double block_rate, SurvivalMode mode, double deadline_s) {
  if (!(break_time_s >= 0.0)) throw ValidationError("break time must be nonnegative");
  if (mode == SurvivalMode::FixedDeadline) return break_time_s < deadline_s ? 1.0 : 0.0;
  if (!(block_rate >= 0.0)) throw ValidationError("confirmation rate must be nonnegative");
  return std::exp(-block_rate * break_time_s);
}

std::optional<ClaimAudit> audit_claim(const AttackProfile& profile) {
  if (!profile.claimed_clock_hz || !profile.claimed_window_s) return std::nullopt;
  ClaimAudit audit;
  audit.derived_clock_hz = required_clock(profile.serial_gates, *profile.claimed_window_s);
  audit.implied_window_s = implied_window(profile.serial_gates, *profile.claimed_clock_hz);
  // Claims are quoted loosely ("around 660 MHz"); agreement within 1% counts.
  const Rational gap = audit.derived_clock_hz - *profile.claimed_clock_hz;
  audit.consistent = (gap < 0 ? Rational(-gap) : gap) * 100 <= *profile.claimed_clock_hz;
  if (!audit.consistent) {
    audit.annotation = "MISMATCH: claimed " + to_sig_digits(*profile.claimed_clock_hz) + " Hz for a " +
                       to_sig_digits(*profile.claimed_window_s) + " s window, but " + profile.serial_gates.str() +
                       " serial gates / " + to_sig_digits(*profile.claimed_window_s) + " s = " +
                       to_sig_digits(audit.derived_clock_hz) + " Hz; the claimed clock finishes in " +
                       to_sig_digits(audit.implied_window_s) + " s";
  }
  return audit;
}

}  // namespace qbtc
