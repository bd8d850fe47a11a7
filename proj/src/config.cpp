#include "qbtc/config.hpp"

#include <set>

#include "qbtc/compact_target.hpp"

namespace qbtc {

EconParams RunConfig::econ() const {
  EconParams p;
  p.target = target;
  p.space_bits = space_bits;
  p.classical_rate = classical_rate_hz;
  p.quantum_rate = quantum_rate_hz;
  p.reward = reward();
  p.cost_rate = cost_rate_fiat_per_s;
  p.block_rate = block_rate_per_s;
  return p;
}

void RunConfig::validate() const {
  econ().validate();
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string(name) + " must be positive");
  };
  if (!std::isfinite(reward_btc) || reward_btc < 0.0) throw ValidationError("reward_btc must be nonnegative");
  if (!std::isfinite(btc_price_fiat) || btc_price_fiat < 0.0) throw ValidationError("btc_price_fiat must be nonnegative");
  if (profit_t_s && (!std::isfinite(*profit_t_s) || *profit_t_s < 0.0)) throw ValidationError("t_s must be nonnegative");
  if (profit_t_max_s) positive(*profit_t_max_s, "t_max_s");
  if (profit_points < 2) throw ValidationError("points must be at least 2");
  positive(ceiling_hz, "ceiling_hz");
  positive(fleet_rate_hz, "per_machine_rate_hz");
  if (fleet_reference != "classical" && fleet_reference != "quantum") {
    throw ValidationError("reference must be 'classical' or 'quantum'");
  }
  if (!std::isfinite(fleet_reference_rate_hz) || fleet_reference_rate_hz < 0.0) {
    throw ValidationError("reference_rate_hz must be nonnegative");
  }
  positive(race_measure_at_s, "measure_at_s");
  if (race_horizon_blocks < 1) throw ValidationError("horizon_blocks must be at least 1");
  if (race_replicas < 1) throw ValidationError("replicas must be at least 1");
  if (race_retarget_interval_blocks < 1) throw ValidationError("retarget_interval_blocks must be at least 1");
  if (!find_profile(attack_profile)) throw ValidationError("unknown attack profile '" + attack_profile + "'");
  if (attack_window_s && attack_clock_hz) throw ValidationError("give either window_s or clock_hz, not both");
  if (attack_window_s) positive(*attack_window_s, "window_s");
  if (attack_clock_hz) positive(*attack_clock_hz, "clock_hz");
  if (!std::isfinite(attack_confirm_rate_per_s) || attack_confirm_rate_per_s < 0.0) {
    throw ValidationError("confirm_rate_per_s must be nonnegative");
  }
  if (attack_survival_mode != "exponential" && attack_survival_mode != "deadline") {
    throw ValidationError("survival_mode must be 'exponential' or 'deadline'");
  }
  positive(attack_deadline_s, "deadline_s");
  if (grover_n < 1 || grover_n > 16) throw ValidationError("grover n must lie in [1, 16]");
  if (grover_tau > 65536u) throw ValidationError("grover tau must not exceed 65536");
}

void apply_preset(RunConfig& config, const std::string& name) {
  if (name != kPaperPreset) throw ValidationError("unknown preset '" + name + "'");
  config.preset = name;
  config.target = BigUint(890'000'000'000ULL);
  config.space_bits = 256;
  config.classical_rate_hz = 125'000.0;
  config.quantum_rate_hz = 48'000.0;
  config.reward_btc = 12.5;
  config.btc_price_fiat = 7'000.0;
  config.reward_fiat.reset();
  // One classical mining rig per hour: 1.3 kW at 0.10 fiat/kWh.
  config.cost_rate_fiat_per_s = 1.3 * 0.10 / 3600.0;
  config.block_rate_per_s = 1.0 / 600.0;
  config.fleet_rate_hz = 3'000.0;
  config.fleet_reference = "classical";
  config.fleet_reference_rate_hz = 125'000.0;
}

BigUint parse_target_value(const nlohmann::json& value) {
  if (value.is_number_unsigned()) return BigUint(value.get<std::uint64_t>());
  if (value.is_string()) return parse_big_literal(value.get<std::string>());
  throw ValidationError("target must be an unsigned integer or a string literal");
}

namespace {

template <class T>
T get_as(const nlohmann::json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("config field '" + key + "' has the wrong type");
  }
}

double get_number(const nlohmann::json& j, const std::string& key) {
  if (!j.at(key).is_number()) throw ValidationError("config field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

std::uint64_t get_count(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw ValidationError("config field '" + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::uint32_t parse_nbits(const nlohmann::json& value) {
  BigUint v = value.is_number_unsigned() ? BigUint(value.get<std::uint64_t>())
              : value.is_string()        ? parse_big_literal(value.get<std::string>())
                                         : throw ValidationError("target_nbits must be an integer or hex string");
  if (v > 0xFFFFFFFFu) throw ValidationError("target_nbits must fit in 32 bits");
  return v.convert_to<std::uint32_t>();
}

}  // namespace

void apply_json(RunConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  static const std::set<std::string> known = {
      "preset", "target", "target_nbits", "space_bits", "classical_rate_hz", "quantum_rate_hz", "reward_btc",
      "btc_price_fiat", "reward_fiat", "cost_rate_fiat_per_s", "block_rate_per_s", "format", "seed", "t_s", "t_max_s",
      "points", "ceiling_hz", "per_machine_rate_hz", "reference", "reference_rate_hz", "measure_at_s",
      "horizon_blocks", "replicas", "retarget", "retarget_interval_blocks", "measure_on_interrupt", "threads",
      "profile", "window_s", "clock_hz", "confirm_rate_per_s", "survival_mode", "deadline_s", "grover_n",
      "grover_tau", "grover_k"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ValidationError("unknown config field '" + key + "'");
  }
  if (j.contains("target") && j.contains("target_nbits")) {
    throw ValidationError("give either target or target_nbits, not both");
  }

  if (j.contains("preset")) {
    if (j["preset"].is_null()) {
      config.preset.reset();
    } else {
      apply_preset(config, get_as<std::string>(j, "preset"));
    }
  }
  if (j.contains("target")) config.target = parse_target_value(j["target"]);
  if (j.contains("target_nbits")) config.target = parse_compact_target(parse_nbits(j["target_nbits"]));
  if (j.contains("space_bits")) config.space_bits = static_cast<int>(get_count(j, "space_bits"));
  if (j.contains("classical_rate_hz")) config.classical_rate_hz = get_number(j, "classical_rate_hz");
  if (j.contains("quantum_rate_hz")) config.quantum_rate_hz = get_number(j, "quantum_rate_hz");
  if (j.contains("reward_btc")) config.reward_btc = get_number(j, "reward_btc");
  if (j.contains("btc_price_fiat")) config.btc_price_fiat = get_number(j, "btc_price_fiat");
  if (j.contains("reward_fiat")) {
    if (j["reward_fiat"].is_null()) {
      config.reward_fiat.reset();
    } else {
      config.reward_fiat = get_number(j, "reward_fiat");
    }
  }
  if (j.contains("cost_rate_fiat_per_s")) config.cost_rate_fiat_per_s = get_number(j, "cost_rate_fiat_per_s");
  if (j.contains("block_rate_per_s")) config.block_rate_per_s = get_number(j, "block_rate_per_s");
  if (j.contains("format")) {
    const auto f = get_as<std::string>(j, "format");
    if (f == "json") {
      config.format = OutputFormat::Json;
    } else if (f == "csv") {
      config.format = OutputFormat::Csv;
    } else {
      throw ValidationError("format must be 'json' or 'csv'");
    }
  }
  if (j.contains("seed")) config.seed = get_count(j, "seed");
  if (j.contains("t_s")) {
    if (j["t_s"].is_null()) {
      config.profit_t_s.reset();
    } else {
      config.profit_t_s = get_number(j, "t_s");
    }
  }
  if (j.contains("t_max_s")) {
    if (j["t_max_s"].is_null()) {
      config.profit_t_max_s.reset();
    } else {
      config.profit_t_max_s = get_number(j, "t_max_s");
    }
  }
  if (j.contains("points")) config.profit_points = static_cast<int>(get_count(j, "points"));
  if (j.contains("ceiling_hz")) config.ceiling_hz = get_number(j, "ceiling_hz");
  if (j.contains("per_machine_rate_hz")) config.fleet_rate_hz = get_number(j, "per_machine_rate_hz");
  if (j.contains("reference")) config.fleet_reference = get_as<std::string>(j, "reference");
  if (j.contains("reference_rate_hz")) config.fleet_reference_rate_hz = get_number(j, "reference_rate_hz");
  if (j.contains("measure_at_s")) config.race_measure_at_s = get_number(j, "measure_at_s");
  if (j.contains("horizon_blocks")) config.race_horizon_blocks = get_count(j, "horizon_blocks");
  if (j.contains("replicas")) config.race_replicas = get_count(j, "replicas");
  if (j.contains("retarget")) config.race_retarget = get_as<bool>(j, "retarget");
  if (j.contains("retarget_interval_blocks")) {
    config.race_retarget_interval_blocks = get_count(j, "retarget_interval_blocks");
  }
  if (j.contains("measure_on_interrupt")) config.race_measure_on_interrupt = get_as<bool>(j, "measure_on_interrupt");
  if (j.contains("threads")) config.race_threads = static_cast<unsigned>(get_count(j, "threads"));
  if (j.contains("profile")) config.attack_profile = get_as<std::string>(j, "profile");
  if (j.contains("window_s")) {
    if (j["window_s"].is_null()) {
      config.attack_window_s.reset();
    } else {
      config.attack_window_s = get_number(j, "window_s");
    }
  }
  if (j.contains("clock_hz")) {
    if (j["clock_hz"].is_null()) {
      config.attack_clock_hz.reset();
    } else {
      config.attack_clock_hz = get_number(j, "clock_hz");
    }
  }
  if (j.contains("confirm_rate_per_s")) config.attack_confirm_rate_per_s = get_number(j, "confirm_rate_per_s");
  if (j.contains("survival_mode")) config.attack_survival_mode = get_as<std::string>(j, "survival_mode");
  if (j.contains("deadline_s")) config.attack_deadline_s = get_number(j, "deadline_s");
  if (j.contains("grover_n")) config.grover_n = static_cast<int>(get_count(j, "grover_n"));
  if (j.contains("grover_tau")) config.grover_tau = static_cast<std::uint32_t>(get_count(j, "grover_tau"));
  if (j.contains("grover_k")) {
    if (j["grover_k"].is_null()) {
      config.grover_k.reset();
    } else {
      config.grover_k = get_count(j, "grover_k");
    }
  }
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  auto optional = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
  j["preset"] = optional(c.preset);
  j["target"] = to_decimal(c.target);
  j["space_bits"] = c.space_bits;
  j["classical_rate_hz"] = c.classical_rate_hz;
  j["quantum_rate_hz"] = c.quantum_rate_hz;
  j["reward_btc"] = c.reward_btc;
  j["btc_price_fiat"] = c.btc_price_fiat;
  j["reward_fiat"] = optional(c.reward_fiat);
  j["cost_rate_fiat_per_s"] = c.cost_rate_fiat_per_s;
  j["block_rate_per_s"] = c.block_rate_per_s;
  j["format"] = c.format == OutputFormat::Json ? "json" : "csv";
  j["seed"] = c.seed;
  j["t_s"] = optional(c.profit_t_s);
  j["t_max_s"] = optional(c.profit_t_max_s);
  j["points"] = c.profit_points;
  j["ceiling_hz"] = c.ceiling_hz;
  j["per_machine_rate_hz"] = c.fleet_rate_hz;
  j["reference"] = c.fleet_reference;
  j["reference_rate_hz"] = c.fleet_reference_rate_hz;
  j["measure_at_s"] = c.race_measure_at_s;
  j["horizon_blocks"] = c.race_horizon_blocks;
  j["replicas"] = c.race_replicas;
  j["retarget"] = c.race_retarget;
  j["retarget_interval_blocks"] = c.race_retarget_interval_blocks;
  j["measure_on_interrupt"] = c.race_measure_on_interrupt;
  j["threads"] = c.race_threads;
  j["profile"] = c.attack_profile;
  j["window_s"] = optional(c.attack_window_s);
  j["clock_hz"] = optional(c.attack_clock_hz);
  j["confirm_rate_per_s"] = c.attack_confirm_rate_per_s;
  j["survival_mode"] = c.attack_survival_mode;
  j["deadline_s"] = c.attack_deadline_s;
  j["grover_n"] = c.grover_n;
  j["grover_tau"] = c.grover_tau;
  j["grover_k"] = optional(c.grover_k);
  return j;
}

}  // namespace qbtc
