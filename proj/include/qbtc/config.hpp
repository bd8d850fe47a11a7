#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "qbtc/attack_calc.hpp"
#include "qbtc/econ.hpp"

namespace qbtc {

enum class OutputFormat { Json, Csv };

inline constexpr const char* kPaperPreset = "paper-2017";

/// Everything a CLI run needs. Loaded in layers: defaults, then a preset, then
/// a JSON config file, then command-line flags.
struct RunConfig {
  std::optional<std::string> preset;

  // Scenario.
  BigUint target = BigUint(0xFFFF) << 208;  // compact 0x1d00ffff
  int space_bits = 256;
  double classical_rate_hz = 0.0;
  double quantum_rate_hz = 0.0;
  double reward_btc = 12.5;
  double btc_price_fiat = 1.0;
  std::optional<double> reward_fiat;  ///< overrides reward_btc * btc_price_fiat
  double cost_rate_fiat_per_s = 0.0;
  double block_rate_per_s = 1.0 / 600.0;

  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 42;

  // profit
  std::optional<double> profit_t_s;
  std::optional<double> profit_t_max_s;
  int profit_points = 201;

  // breakeven
  double ceiling_hz = kDefaultRateCeiling;

  // fleet
  double fleet_rate_hz = 3000.0;
  std::string fleet_reference = "classical";  ///< "classical" or "quantum"
  double fleet_reference_rate_hz = 125000.0;

  // race
  double race_measure_at_s = 600.0;
  std::uint64_t race_horizon_blocks = 1000;
  std::uint64_t race_replicas = 100;
  bool race_retarget = false;
  std::uint64_t race_retarget_interval_blocks = 2016;
  bool race_measure_on_interrupt = false;
  unsigned race_threads = 0;

  // attack
  std::string attack_profile = "roetteler";
  std::optional<double> attack_window_s;
  std::optional<double> attack_clock_hz;
  double attack_confirm_rate_per_s = 1.0 / 600.0;
  std::string attack_survival_mode = "exponential";  ///< or "deadline"
  double attack_deadline_s = 600.0;

  // grover-verify
  int grover_n = 10;
  std::uint32_t grover_tau = 16;
  std::optional<std::uint64_t> grover_k;

  double reward() const { return reward_fiat.value_or(reward_btc * btc_price_fiat); }
  EconParams econ() const;

  /// Throws ValidationError if any module invariant is violated.
  void validate() const;
};

/// Sets the named preset's values on `config`; throws ValidationError for unknown names.
void apply_preset(RunConfig& config, const std::string& name);

/// Overlays the fields present in `j` (applying its "preset" first, if any).
/// Unknown keys and wrongly typed values throw ValidationError.
void apply_json(RunConfig& config, const nlohmann::json& j);

/// Normalized document: every field present, target as a decimal string.
nlohmann::ordered_json to_json(const RunConfig& config);

/// Target given as a JSON string literal (decimal, hex, scientific) or integer.
BigUint parse_target_value(const nlohmann::json& value);

}  // namespace qbtc
