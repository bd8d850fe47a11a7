#include "qbtc/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qbtc/attack_calc.hpp"
#include "qbtc/compact_target.hpp"
#include "qbtc/config.hpp"
#include "qbtc/econ.hpp"
#include "qbtc/grover_math.hpp"
#include "qbtc/race_sim.hpp"
#include "qbtc/toy_pow_oracle.hpp"

namespace qbtc {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kPaperTag = "paper reference — inputs under-determined";

Json big_json(const BigUint& v) {
  if (auto u = to_u64(v)) return *u;
  return to_decimal(v);
}

std::string hex32(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::setw(8) << std::setfill('0') << v;
  return os.str();
}

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_null()) {
    s = "";
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

/// Header row plus one row per record; nested values are serialized as JSON text.
std::string to_csv(const std::vector<Json>& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    os << (first ? "" : ",") << csv_field(key);
    first = false;
  }
  os << "\r\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      os << (first ? "" : ",") << csv_field(value);
      first = false;
    }
    os << "\r\n";
  }
  return os.str();
}

/// Scalar fields of `doc` as a single CSV record.
std::string flat_csv(const Json& doc) {
  Json row = Json::object();
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_structured()) row[key] = value;
  }
  return to_csv({row});
}

Json params_json(const EconParams& p) {
  Json j;
  j["target"] = to_decimal(p.target);
  j["target_log2"] = log2_big(p.target);
  j["space_bits"] = p.space_bits;
  j["classical_rate_hz"] = p.classical_rate;
  j["quantum_rate_hz"] = p.quantum_rate;
  j["reward_fiat"] = p.reward;
  j["cost_rate_fiat_per_s"] = p.cost_rate;
  j["block_rate_per_s"] = p.block_rate;
  return j;
}

struct Output {
  Json doc;
  std::optional<std::vector<Json>> csv_rows;  ///< replaces the flat CSV rendering
};

Json point_json(const EconParams& p, double t) {
  Json j;
  j["t_s"] = t;
  j["p_quantum"] = paper_success_prob(p.quantum_rate, t, p.ratio());
  j["survival"] = survival_prob(t, p.block_rate);
  j["profit_fiat"] = quantum_profit(p, t);
  return j;
}

Output cmd_profit(const RunConfig& cfg) {
  const EconParams p = cfg.econ();
  Output out;
  out.doc["subcommand"] = "profit";
  out.doc["params"] = params_json(p);
  if (cfg.profit_t_s) {
    const Json point = point_json(p, *cfg.profit_t_s);
    for (const auto& [k, v] : point.items()) out.doc[k] = v;
    return out;
  }
  const double t_max = cfg.profit_t_max_s.value_or(measurement_horizon(p));
  if (!std::isfinite(t_max)) throw ValidationError("profit curve needs --t-max when the window is unbounded");
  out.doc["t_max_s"] = t_max;
  std::vector<Json> rows;
  for (int i = 0; i < cfg.profit_points; ++i) {
    const double t = i + 1 == cfg.profit_points ? t_max : t_max * i / (cfg.profit_points - 1);
    rows.push_back(point_json(p, t));
  }
  out.doc["points"] = rows;
  out.csv_rows = rows;
  return out;
}

Output cmd_optimal_t(const RunConfig& cfg) {
  const EconParams p = cfg.econ();
  const MeasurementPlan plan = optimal_measurement_time(p);
  Output out;
  out.doc["subcommand"] = "optimal-t";
  out.doc["params"] = params_json(p);
  out.doc["t_max_s"] = measurement_horizon(p);
  out.doc["profitable"] = plan.t_star > 0.0;
  out.doc["t_star_s"] = plan.t_star;
  out.doc["profit_fiat"] = plan.profit;
  out.doc["p_quantum"] = paper_success_prob(p.quantum_rate, plan.t_star, p.ratio());
  out.doc["survival"] = survival_prob(plan.t_star, p.block_rate);
  return out;
}

Output cmd_breakeven(const RunConfig& cfg) {
  const EconParams p = cfg.econ();
  const BreakevenResult r = breakeven_quantum_rate(p, cfg.ceiling_hz);
  Output out;
  out.doc["subcommand"] = "breakeven";
  out.doc["params"] = params_json(p);
  out.doc["ceiling_hz"] = cfg.ceiling_hz;
  switch (r.status) {
    case BreakevenStatus::Ok:
      out.doc["status"] = "ok";
      out.doc["rq_breakeven_hz"] = r.quantum_rate;
      out.doc["profit_fiat"] = r.profit;
      out.doc["t_star_s"] = r.t_star;
      out.doc["note"] = "smallest quantum rate whose optimally timed profit is nonnegative";
      break;
    case BreakevenStatus::TriviallyProfitable:
      out.doc["status"] = "trivially_profitable";
      out.doc["rq_breakeven_hz"] = 0.0;
      out.doc["profit_fiat"] = 0.0;
      out.doc["t_star_s"] = 0.0;
      out.doc["note"] = "trivially profitable: zero running cost, so any positive rate profits";
      break;
    case BreakevenStatus::NeverProfitable:
      out.doc["status"] = "never_profitable";
      out.doc["rq_breakeven_hz"] = nullptr;
      out.doc["profit_fiat"] = nullptr;
      out.doc["t_star_s"] = nullptr;
      out.doc["note"] = "never profitable at any rate up to ceiling_hz";
      break;
  }
  if (cfg.preset == kPaperPreset) {
    Json ref;
    ref["rq_breakeven_hz"] = 48000.0;
    ref["classical_rate_hz"] = 125000.0;
    ref["tag"] = kPaperTag;
    out.doc["paper_reference"] = ref;
  }
  return out;
}

Output cmd_fleet(const RunConfig& cfg) {
  const EconParams p = cfg.econ();
  FleetReference ref = cfg.fleet_reference == "classical" ? FleetReference{ClassicalReference{cfg.fleet_reference_rate_hz}}
                                                          : FleetReference{QuantumReference{cfg.fleet_reference_rate_hz}};
  const FleetMatch m = machines_to_match(p, cfg.fleet_rate_hz, ref);
  Output out;
  out.doc["subcommand"] = "fleet";
  out.doc["params"] = params_json(p);
  out.doc["per_machine_rate_hz"] = cfg.fleet_rate_hz;
  out.doc["reference_kind"] = cfg.fleet_reference;
  out.doc["reference_rate_hz"] = cfg.fleet_reference_rate_hz;
  out.doc["window_s"] = m.window;
  out.doc["p_single"] = m.p_single;
  out.doc["p_reference"] = m.p_reference;
  out.doc["machines"] = m.machines ? big_json(*m.machines) : Json(nullptr);
  out.doc["fleet_success"] = m.machines ? fleet_success(m.p_single, *m.machines) : 0.0;
  out.doc["advantage_cap"] = advantage_cap(p.ratio());
  if (cfg.preset == kPaperPreset) {
    Json r;
    r["machines"] = 1300;
    r["per_machine_rate_hz"] = 3000.0;
    r["reference_rate_hz"] = 125000.0;
    r["tag"] = kPaperTag;
    out.doc["paper_reference"] = r;
  }
  return out;
}

std::string trace_csv(const std::vector<BlockRecord>& trace) {
  std::vector<Json> rows;
  rows.reserve(trace.size());
  for (const auto& b : trace) {
    Json row;
    row["block_index"] = b.block_index;
    row["winner"] = b.winner == Winner::Quantum ? "quantum" : "network";
    row["interval_s"] = b.interval_s;
    row["target_log2"] = b.target_log2;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return "block_index,winner,interval_s,target_log2\r\n";
  return to_csv(rows);
}

Output cmd_race(const RunConfig& cfg, const std::string& trace_path) {
  RaceConfig rc;
  rc.econ = cfg.econ();
  rc.measure_at = cfg.race_measure_at_s;
  rc.horizon_blocks = cfg.race_horizon_blocks;
  rc.replicas = cfg.race_replicas;
  rc.master_seed = cfg.seed;
  rc.retarget = cfg.race_retarget;
  rc.retarget_interval_blocks = cfg.race_retarget_interval_blocks;
  rc.measure_on_interrupt = cfg.race_measure_on_interrupt;
  rc.threads = cfg.race_threads;
  rc.trace = !trace_path.empty() || cfg.format == OutputFormat::Csv;
  const RaceStats s = run_race(rc);

  const double analytic = rc.measure_on_interrupt ? analytic_win_rate_measure_on_interrupt(rc.econ, rc.measure_at)
                                                  : analytic_win_rate(rc.econ, rc.measure_at);
  Output out;
  out.doc["subcommand"] = "race";
  out.doc["params"] = params_json(rc.econ);
  out.doc["measure_at_s"] = rc.measure_at;
  out.doc["horizon_blocks"] = rc.horizon_blocks;
  out.doc["replicas"] = rc.replicas;
  out.doc["retarget"] = rc.retarget;
  out.doc["measure_on_interrupt"] = rc.measure_on_interrupt;
  out.doc["master_seed"] = rc.master_seed;
  out.doc["quantum_blocks_won"] = s.quantum_blocks_won;
  out.doc["network_blocks"] = s.network_blocks;
  out.doc["total_blocks"] = s.total_blocks();
  out.doc["attempts"] = s.attempts;
  out.doc["quantum_win_rate"] = s.quantum_win_rate;
  out.doc["win_rate_stderr"] = s.win_rate_stderr;
  out.doc["analytic_win_rate"] = analytic;
  out.doc["z_score"] = s.win_rate_stderr > 0.0 ? (s.quantum_win_rate - analytic) / s.win_rate_stderr : 0.0;
  out.doc["revenue_fiat"] = s.revenue;
  out.doc["quantum_runtime_cost_fiat"] = s.quantum_runtime_cost;
  out.doc["elapsed_s"] = s.elapsed_s;
  out.doc["mean_interval_s"] = s.mean_interval_s;
  out.doc["final_target_log2"] = s.final_target_log2;
  out.doc["replica_seeds"] = s.replica_seeds;

  if (!trace_path.empty()) {
    std::ofstream f(trace_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open trace file '" + trace_path + "'");
    f << trace_csv(s.trace);
  }
  if (cfg.format == OutputFormat::Csv) {
    std::vector<Json> rows;
    for (const auto& b : s.trace) {
      Json row;
      row["block_index"] = b.block_index;
      row["winner"] = b.winner == Winner::Quantum ? "quantum" : "network";
      row["interval_s"] = b.interval_s;
      row["target_log2"] = b.target_log2;
      rows.push_back(std::move(row));
    }
    out.csv_rows = rows;
  }
  return out;
}

Output cmd_attack(const RunConfig& cfg) {
  const AttackProfile profile = *find_profile(cfg.attack_profile);
  Rational window;
  Rational clock;
  if (cfg.attack_clock_hz) {
    clock = to_rational(*cfg.attack_clock_hz);
    window = implied_window(profile.serial_gates, clock);
  } else {
    window = to_rational(cfg.attack_window_s.value_or(3600.0));
    clock = required_clock(profile.serial_gates, window);
  }
  const bool deadline = cfg.attack_survival_mode == "deadline";
  const double break_time = to_double(window);
  const double survival =
      attack_survival(break_time, cfg.attack_confirm_rate_per_s,
                      deadline ? SurvivalMode::FixedDeadline : SurvivalMode::Exponential, cfg.attack_deadline_s);

  Output out;
  out.doc["subcommand"] = "attack";
  out.doc["profile"] = profile.name;
  out.doc["source"] = profile.source_label;
  out.doc["qubits"] = profile.qubits;
  out.doc["gates"] = big_json(profile.serial_gates);
  out.doc["window_s"] = to_double(window);
  out.doc["window_s_6sig"] = to_sig_digits(window);
  out.doc["required_hz"] = to_double(clock);
  out.doc["required_hz_6sig"] = to_sig_digits(clock);
  out.doc["survival_mode"] = cfg.attack_survival_mode;
  out.doc["confirm_rate_per_s"] = cfg.attack_confirm_rate_per_s;
  if (deadline) out.doc["deadline_s"] = cfg.attack_deadline_s;
  out.doc["survival"] = survival;
  if (auto audit = audit_claim(profile)) {
    Json claim;
    claim["clock_hz"] = to_double(*profile.claimed_clock_hz);
    claim["window_s"] = to_double(*profile.claimed_window_s);
    claim["derived_clock_hz"] = to_double(audit->derived_clock_hz);
    claim["implied_window_s"] = to_double(audit->implied_window_s);
    claim["consistent"] = audit->consistent;
    claim["annotation"] = audit->annotation;
    out.doc["paper_claim"] = claim;
  }
  return out;
}

Output cmd_grover_verify(const RunConfig& cfg) {
  ToyPuzzle puzzle{cfg.grover_n, cfg.grover_tau};
  puzzle.validate();
  const std::uint32_t m = marked_count(puzzle);
  const std::uint64_t k =
      cfg.grover_k.value_or(m == 0 ? 0 : optimal_iterations(cfg.grover_n, m).convert_to<std::uint64_t>());
  const GroverInstance inst{cfg.grover_n, m, k};
  const double formula = exact_success_prob(inst);
  const double simulated = grover_simulate(puzzle, k);
  const double theta = grover_angle(cfg.grover_n, m);
  const double fraction = static_cast<double>(m) / static_cast<double>(puzzle.size());
  const TargetRatio ratio = make_target_ratio(BigUint(std::max<std::uint32_t>(m, 1)), cfg.grover_n);
  const double paper_form = m == 0 ? 0.0 : paper_success_prob(static_cast<double>(k), 1.0, ratio);

  Output out;
  out.doc["subcommand"] = "grover-verify";
  out.doc["n"] = cfg.grover_n;
  out.doc["tau"] = cfg.grover_tau;
  out.doc["marked_count"] = m;
  out.doc["k"] = k;
  out.doc["theta"] = theta;
  out.doc["formula_p"] = formula;
  out.doc["simulated_p"] = simulated;
  out.doc["abs_diff"] = std::abs(formula - simulated);
  out.doc["within_tolerance"] = std::abs(formula - simulated) <= 1e-9;
  out.doc["paper_form_p"] = paper_form;
  out.doc["phase_bound"] = std::abs((2.0 * k + 1.0) * theta - 2.0 * k * std::sqrt(fraction));
  return out;
}

Output cmd_target(const RunConfig& cfg) {
  const TargetRatio ratio = make_target_ratio(cfg.target, cfg.space_bits);
  const std::uint32_t nbits = encode_compact_target(cfg.target);
  Output out;
  out.doc["subcommand"] = "target";
  out.doc["target"] = to_decimal(cfg.target);
  out.doc["target_hex"] = to_hex(cfg.target);
  out.doc["space_bits"] = cfg.space_bits;
  out.doc["log2_ratio"] = ratio.log2_ratio;
  out.doc["nbits"] = hex32(nbits);
  out.doc["nbits_exact"] = parse_compact_target(nbits) == cfg.target;
  out.doc["advantage_cap"] = advantage_cap(ratio);
  return out;
}

/// Flags mirror config keys; only the ones given on the command line are set.
struct Flags {
  std::string config_path;
  std::optional<std::string> preset, target, nbits, format, reference, profile, survival_mode;
  std::optional<int> space_bits, points;
  std::optional<std::uint64_t> seed, blocks, replicas, retarget_interval, grover_k;
  std::optional<unsigned> threads;
  std::optional<std::uint32_t> tau;
  std::optional<int> grover_n;
  std::optional<double> classical_rate, quantum_rate, reward_btc, btc_price, reward, cost_rate, block_rate,
      block_interval, t, t_max, ceiling, per_machine_rate, reference_rate, measure_at, window, clock, confirm_rate,
      deadline;
  bool retarget = false;
  bool measure_on_interrupt = false;
  CLI::Option* retarget_opt = nullptr;
  CLI::Option* interrupt_opt = nullptr;
  std::string trace_path;

  nlohmann::json overrides() const {
    nlohmann::json j = nlohmann::json::object();
    auto put = [&](const char* key, const auto& v) {
      if (v) j[key] = *v;
    };
    put("target", target);
    if (nbits) j["target_nbits"] = *nbits;
    put("space_bits", space_bits);
    put("classical_rate_hz", classical_rate);
    put("quantum_rate_hz", quantum_rate);
    put("reward_btc", reward_btc);
    put("btc_price_fiat", btc_price);
    put("reward_fiat", reward);
    put("cost_rate_fiat_per_s", cost_rate);
    put("block_rate_per_s", block_rate);
    if (block_interval) {
      if (!(*block_interval > 0.0)) throw ValidationError("block interval must be positive");
      j["block_rate_per_s"] = 1.0 / *block_interval;
    }
    put("format", format);
    put("seed", seed);
    put("t_s", t);
    put("t_max_s", t_max);
    put("points", points);
    put("ceiling_hz", ceiling);
    put("per_machine_rate_hz", per_machine_rate);
    put("reference", reference);
    put("reference_rate_hz", reference_rate);
    put("measure_at_s", measure_at);
    put("horizon_blocks", blocks);
    put("replicas", replicas);
    if (retarget_opt && retarget_opt->count() > 0) j["retarget"] = retarget;
    put("retarget_interval_blocks", retarget_interval);
    if (interrupt_opt && interrupt_opt->count() > 0) j["measure_on_interrupt"] = measure_on_interrupt;
    put("threads", threads);
    put("profile", profile);
    put("window_s", window);
    put("clock_hz", clock);
    put("confirm_rate_per_s", confirm_rate);
    put("survival_mode", survival_mode);
    put("deadline_s", deadline);
    put("grover_n", grover_n);
    put("grover_tau", tau);
    put("grover_k", grover_k);
    return j;
  }
};

RunConfig load_config(const Flags& flags) {
  RunConfig cfg;
  if (flags.preset) apply_preset(cfg, *flags.preset);
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw ValidationError("cannot read config file '" + flags.config_path + "'");
    nlohmann::json file;
    try {
      file = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (flags.preset && file.is_object()) file.erase("preset");
    if (flags.target || flags.nbits) {
      // A target flag replaces whichever target form the file used.
      if (file.is_object()) {
        file.erase("target");
        file.erase("target_nbits");
      }
    }
    apply_json(cfg, file);
  }
  apply_json(cfg, flags.overrides());
  cfg.validate();
  return cfg;
}

void add_scenario_options(CLI::App& app, Flags& f) {
  app.add_option("--config", f.config_path, "JSON config file (flags override its values)");
  app.add_option("--preset", f.preset, "Parameter preset (paper-2017)");
  auto* target = app.add_option("--target", f.target, "Target T: decimal, 0x-hex or scientific integer literal");
  app.add_option("--nbits", f.nbits, "Target in Bitcoin compact encoding, e.g. 0x1d00ffff")->excludes(target);
  app.add_option("--space-bits", f.space_bits, "Hash width n in bits");
  app.add_option("--classical-rate", f.classical_rate, "Classical hash rate r (hashes/s)");
  app.add_option("--quantum-rate", f.quantum_rate, "Quantum rate r_q (Grover iterations/s)");
  app.add_option("--reward-btc", f.reward_btc, "Block reward in BTC");
  app.add_option("--btc-price", f.btc_price, "Fiat per BTC");
  app.add_option("--reward", f.reward, "Block reward in fiat (overrides BTC reward x price)");
  app.add_option("--cost-rate", f.cost_rate, "Quantum running cost C (fiat/s)");
  auto* rate = app.add_option("--block-rate", f.block_rate, "Network block rate lambda (1/s)");
  app.add_option("--block-interval", f.block_interval, "Mean block interval 1/lambda (s)")->excludes(rate);
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", f.seed, "Master seed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum mining economics, Grover oracle checks and ECDSA attack arithmetic", "qbtc"};
  app.require_subcommand(1);
  Flags f;

  auto* profit = app.add_subcommand("profit", "Quantum mining profit at one time or along a curve");
  profit->add_option("--t", f.t, "Single evaluation time (s)");
  profit->add_option("--t-max", f.t_max, "Curve end time (s); defaults to the optimizer window");
  profit->add_option("--points", f.points, "Curve sample count");

  auto* optimal = app.add_subcommand("optimal-t", "Profit-maximizing measurement time");

  auto* breakeven = app.add_subcommand("breakeven", "Smallest profitable quantum rate");
  breakeven->add_option("--ceiling", f.ceiling, "Largest rate searched (iterations/s)");

  auto* fleet = app.add_subcommand("fleet", "Parallel quantum machines needed to match a reference");
  fleet->add_option("--per-machine-rate", f.per_machine_rate, "Rate of each fleet machine (iterations/s)");
  fleet->add_option("--reference", f.reference, "Reference kind")->check(CLI::IsMember({"classical", "quantum"}));
  fleet->add_option("--reference-rate", f.reference_rate, "Reference rate (hashes/s or iterations/s)");

  auto* race = app.add_subcommand("race", "Monte Carlo race of a quantum miner against the network");
  race->add_option("--measure-at", f.measure_at, "Grover run length before measuring (s)");
  race->add_option("--blocks", f.blocks, "Blocks simulated per replica");
  race->add_option("--replicas", f.replicas, "Independent replicas");
  f.retarget_opt = race->add_flag("--retarget,!--no-retarget", f.retarget, "Enable difficulty retargeting");
  race->add_option("--retarget-interval", f.retarget_interval, "Blocks between retargets");
  f.interrupt_opt = race->add_flag("--measure-on-interrupt,!--no-measure-on-interrupt", f.measure_on_interrupt,
                                   "Measure immediately when a network block interrupts a run");
  race->add_option("--threads", f.threads, "Worker threads (0 = hardware concurrency)");
  race->add_option("--trace", f.trace_path, "Write the per-block CSV trace of replica 0 to this file");

  auto* attack = app.add_subcommand("attack", "ECDSA key-recovery resource arithmetic");
  attack->add_option("--profile", f.profile, "Built-in profile: proos-zalka or roetteler");
  auto* window = attack->add_option("--window", f.window, "Attack window (s); gives the required clock");
  attack->add_option("--clock", f.clock, "Clock rate (gates/s); gives the implied window")->excludes(window);
  attack->add_option("--confirm-rate", f.confirm_rate, "Confirmation rate of the pending transaction (1/s)");
  attack->add_option("--survival-mode", f.survival_mode, "Survival model")
      ->check(CLI::IsMember({"exponential", "deadline"}));
  attack->add_option("--deadline", f.deadline, "Fixed deadline for --survival-mode deadline (s)");

  auto* grover = app.add_subcommand("grover-verify", "Compare the Grover formula with the statevector simulator");
  grover->add_option("--n", f.grover_n, "Search space bits (1..16)");
  grover->add_option("--tau", f.tau, "Toy hash threshold");
  grover->add_option("--k", f.grover_k, "Grover iterations (default: optimal)");

  auto* target = app.add_subcommand("target", "Decode and re-encode the configured target");
  auto* show_config = app.add_subcommand("config", "Print the normalized configuration");

  for (auto* sub : {profit, optimal, breakeven, fleet, race, attack, grover, target, show_config}) {
    add_scenario_options(*sub, f);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();

  std::string rendered;
  try {
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kExitValidation;
    }
    for (auto* sub : app.get_subcommands()) {
      if (sub->get_option("--help")->count() > 0) {
        out << sub->help();
        return kExitOk;
      }
    }

    const RunConfig cfg = load_config(f);
    Output result;
    if (profit->parsed()) {
      result = cmd_profit(cfg);
    } else if (optimal->parsed()) {
      result = cmd_optimal_t(cfg);
    } else if (breakeven->parsed()) {
      result = cmd_breakeven(cfg);
    } else if (fleet->parsed()) {
      result = cmd_fleet(cfg);
    } else if (race->parsed()) {
      result = cmd_race(cfg, f.trace_path);
    } else if (attack->parsed()) {
      result = cmd_attack(cfg);
    } else if (grover->parsed()) {
      result = cmd_grover_verify(cfg);
    } else if (target->parsed()) {
      result = cmd_target(cfg);
    } else {
      result.doc = to_json(cfg);
    }

    if (cfg.format == OutputFormat::Csv) {
      rendered = result.csv_rows ? to_csv(*result.csv_rows) : flat_csv(result.doc);
    } else {
      rendered = result.doc.dump(2) + "\n";
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  out << rendered;
  return kExitOk;
}

}  // namespace qbtc
