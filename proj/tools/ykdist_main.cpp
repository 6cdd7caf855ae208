// Copyright 2026 The ykdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// ykdist: analytic sweeps and Monte Carlo key-distribution runs.
//
//   ykdist analyze tradeoff   (snr_db, m, F_plus, e) CSV
//   ykdist analyze boundary   minimum Eve error rate CSV
//   ykdist simulate           JSON report, optional key/transcript files
//
// Exit codes: 0 secure / success, 1 internal error, 2 insecure (R <= 0),
// 3 reconciliation abort, 4 usage error, 5 no sifted bits, 6 no secure key.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ykdist/detection.hpp"
#include "ykdist/mathkit.hpp"
#include "ykdist/report_io.hpp"
#include "ykdist/security.hpp"
#include "ykdist/simulation.hpp"

namespace {

using ykdist::format_double;
using json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInsecure = 2,
  kReconciliationAbort = 3,
  kUsage = 4,
  kNoSiftedBits = 5,
  kNoSecureKey = 6,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output sink: a file when a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw UsageError("bad range: need finite lo <= hi and step > 0");
  }
  std::vector<double> values;
  const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
  if (n > 10'000'000) throw UsageError("range has too many points");
  values.reserve(static_cast<std::size_t>(n) + 1);
  // Index-based to keep grid values free of accumulated rounding.
  for (long long i = 0; i <= n; ++i) values.push_back(lo + static_cast<double>(i) * step);
  return values;
}

// ---------------------------------------------------------------- tradeoff

struct TradeoffOptions {
  std::vector<double> snr_db = {7.8, 2.65, -3.28, -9.25, -15.1, -21.4};
  double m_min = 0.0;
  double m_max = 12.0;
  double m_step = 0.1;
  std::string output;
};

int cmd_tradeoff(const TradeoffOptions& opt) {
  if (!(opt.m_min >= 0.0)) throw UsageError("threshold m must be >= 0");
  const auto ms = grid(opt.m_min, opt.m_max, opt.m_step);
  Output out(opt.output);
  auto& os = out.stream();
  os << "snr_db,m,F_plus,e\n";
  for (const double snr_db : opt.snr_db) {
    const double beta = ykdist::SnrValue::from_db(snr_db).beta();
    for (const double m : ms) {
      os << format_double(snr_db) << ',' << format_double(m) << ','
         << format_double(ykdist::decision_rate_analytic(beta, m)) << ','
         << format_double(ykdist::error_rate_analytic(beta, m)) << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- boundary

struct BoundaryOptions {
  std::vector<double> rate_levels = {0.0, 0.1, 0.2, 0.4};
  std::vector<double> opaque_bob_errors = {0.0, 0.05, 0.1};
  double eb_max = 0.25;
  double eb_step = 0.005;
  std::string output;
};

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("nan");
}

int cmd_boundary(const BoundaryOptions& opt) {
  if (!(opt.eb_max < 0.5)) throw UsageError("--eb-max must be below 0.5");
  const auto ebs = grid(0.0, opt.eb_max, opt.eb_step);
  Output out(opt.output);
  auto& os = out.stream();
  // e_b is the error rate without eavesdropping; e_b_obs the one Bob sees.
  os << "attack,r_level,e_b,e_b_obs,e_e_min\n";
  for (const double level : opt.rate_levels) {
    for (const double eb : ebs) {
      os << "translucent," << format_double(level) << ',' << format_double(eb) << ','
         << format_double(eb) << ',' << optional_cell(ykdist::boundary_eve_error(eb, level))
         << '\n';
    }
  }
  for (const double eb : opt.opaque_bob_errors) {
    for (const double eb_obs : ebs) {
      if (eb_obs < eb) continue;
      os << "opaque,0," << format_double(eb) << ',' << format_double(eb_obs) << ','
         << optional_cell(ykdist::boundary_eve_error_opaque(eb, eb_obs)) << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
  double snr_db = 0.0;
  std::optional<double> eve_snr_db;
  double threshold_m = 2.0;
  double eve_threshold_m = 0.0;
  std::size_t n_bits = 1'000'000;
  std::string attack = "translucent";
  double tap_fraction = 0.5;
  double eta = 1.0;
  std::optional<double> cheat_gamma;
  double relay_noise_sigma = 0.0;
  std::optional<double> monitor_sigma;
  std::string regime = "thermal";
  std::optional<std::uint64_t> seed;
  std::size_t n_s = ykdist::kDefaultSafetyBits;
  bool fixed_pattern = false;
  std::string report;
  std::string alice_key;
  std::string bob_key;
  std::string transcript;
  std::string public_log;
};

// SNRs on the command line are what each receiver sees; the simulated link
// is the signal before any tap.
ykdist::SimulationConfig build_config(const SimulateOptions& opt) {
  const auto regime = ykdist::parse_noise_regime(opt.regime);
  const auto bob_rx = ykdist::SignalParams::from_snr(ykdist::SnrValue::from_db(opt.snr_db), regime);
  std::optional<ykdist::SignalParams> eve_rx;
  if (opt.eve_snr_db) {
    eve_rx = ykdist::SignalParams::from_snr(ykdist::SnrValue::from_db(*opt.eve_snr_db), regime);
  }

  ykdist::SignalParams link = bob_rx;
  std::optional<ykdist::AttackConfig> attack;
  if (opt.attack == "translucent") {
    attack = ykdist::AttackConfig::translucent(opt.tap_fraction, eve_rx);
    link = ykdist::tap_input_for(bob_rx, 1.0 - opt.tap_fraction);
  } else if (opt.attack == "opaque") {
    attack = opt.cheat_gamma
                 ? ykdist::AttackConfig::opaque_cheating(
                       opt.eta, *opt.cheat_gamma, ykdist::ThresholdPolicy(opt.eve_threshold_m),
                       eve_rx)
                 : ykdist::AttackConfig::opaque(opt.eta, eve_rx);
  } else if (opt.attack != "none") {
    throw UsageError("unknown attack '" + opt.attack + "'");
  }
  if (attack) {
    attack->eve_policy = ykdist::ThresholdPolicy(opt.eve_threshold_m);
    attack->relay_noise_sigma = opt.relay_noise_sigma;
    attack->validate();
  }
  if (opt.n_bits == 0) throw UsageError("--n-bits must be positive");

  ykdist::SessionConfig session{opt.n_bits,
                                link,
                                ykdist::ThresholdPolicy(opt.threshold_m),
                                attack,
                                opt.fixed_pattern ? ykdist::AlicePattern::Alternating
                                                  : ykdist::AlicePattern::Random,
                                opt.monitor_sigma};
  ykdist::SimulationConfig cfg{.session = session, .safety_bits = opt.n_s, .cascade = {},
                               .audit_k_sigma = 5.0};
  return cfg;
}

int exit_code_for(ykdist::SimulationOutcome outcome) {
  switch (outcome) {
    case ykdist::SimulationOutcome::Secure:
      return kOk;
    case ykdist::SimulationOutcome::Insecure:
      return kInsecure;
    case ykdist::SimulationOutcome::ReconciliationAborted:
      return kReconciliationAbort;
    case ykdist::SimulationOutcome::NoSiftedBits:
      return kNoSiftedBits;
    case ykdist::SimulationOutcome::NoSecureKey:
      return kNoSecureKey;
  }
  return kInternal;
}

json report_json(const SimulateOptions& opt, std::uint64_t seed,
                 const ykdist::SimulationResult& r) {
  const auto& rep = r.report;
  json j;
  j["eb"] = rep.e_B;
  j["ee"] = rep.e_E;
  j["f_plus"] = rep.F_plus;
  j["i_ab"] = rep.I_AB;
  j["tau"] = rep.tau;
  j["r"] = rep.R;
  j["fr"] = rep.throughput_fraction;
  j["outcome"] = std::string(ykdist::to_string(r.outcome));
  j["exit_code"] = exit_code_for(r.outcome);
  j["detail"] = r.detail;
  j["seed"] = seed;
  j["tau_analytic"] = r.tau_analytic;
  j["r_analytic"] = r.r_analytic;
  j["tau_collision"] = r.tau_collision ? json(*r.tau_collision) : json(nullptr);
  if (r.empirical_joint) {
    const auto& p = *r.empirical_joint;
    j["joint"] = {{"p00", p.p00}, {"p01", p.p01}, {"p10", p.p10}, {"p11", p.p11}};
  }
  const auto& t = r.transcript;
  j["n_bits"] = t.stats.n_raw;
  j["n_sifted"] = t.stats.n_sifted;
  j["bob_errors"] = t.stats.n_errors;
  j["eve_measured"] = t.eve_stats.n_raw;
  j["eve_conclusive"] = t.eve_stats.n_sifted;
  if (r.reconciliation) {
    const auto& rec = *r.reconciliation;
    j["reconciliation"] = {{"n_reconciled", rec.n_reconciled},
                           {"parity_bits", rec.parity_bits_leaked},
                           {"verification_bits", rec.verification_bits_leaked},
                           {"errors_corrected", rec.errors_corrected},
                           {"initial_block", rec.initial_block_size}};
  }
  j["n_s"] = opt.n_s;
  j["final_length"] = r.final_length;
  j["audit"] = {{"pass", r.audit.pass},
                {"n_flagged", r.audit.n_flagged},
                {"flagged_fraction", r.audit.flagged_fraction},
                {"false_positive_rate", r.audit.false_positive_rate}};
  j["config"] = {{"snr_db", opt.snr_db},
                 {"eve_snr_db", opt.eve_snr_db ? json(*opt.eve_snr_db) : json(nullptr)},
                 {"threshold_m", opt.threshold_m},
                 {"eve_threshold_m", opt.eve_threshold_m},
                 {"n_bits", opt.n_bits},
                 {"attack", opt.attack},
                 {"tap_fraction", opt.tap_fraction},
                 {"eta", opt.eta},
                 {"cheat_gamma", opt.cheat_gamma ? json(*opt.cheat_gamma) : json(nullptr)},
                 {"regime", opt.regime},
                 {"fixed_pattern", opt.fixed_pattern}};
  return j;
}

int cmd_simulate(const SimulateOptions& opt) {
  ykdist::SimulationConfig cfg = [&] {
    try {
      return build_config(opt);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  std::uint64_t seed = 0;
  if (opt.seed) {
    seed = *opt.seed;
  } else {
    seed = ykdist::fresh_seed();
    std::cerr << "seed: " << seed << '\n';
  }
  ykdist::SeededRng rng(seed);
  const ykdist::SimulationResult result = ykdist::run_simulation(cfg, rng);

  {
    Output out(opt.report);
    out.stream() << report_json(opt, seed, result).dump(2) << '\n';
  }
  if (!opt.transcript.empty()) {
    Output out(opt.transcript);
    ykdist::write_transcript(out.stream(), result.transcript);
  }
  if (!opt.public_log.empty()) {
    Output out(opt.public_log);
    result.transcript.public_log.write(out.stream());
  }
  // Key material leaves the process only on a secure outcome.
  if (result.secure()) {
    if (!opt.alice_key.empty()) ykdist::write_key_file(opt.alice_key, result.alice_key);
    if (!opt.bob_key.empty()) ykdist::write_key_file(opt.bob_key, result.bob_key);
  } else {
    std::cerr << "ykdist: " << ykdist::to_string(result.outcome) << ": " << result.detail << '\n';
  }
  return exit_code_for(result.outcome);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise-based classical key distribution: analysis and simulation"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults (flags override it)");

  auto* analyze = app.add_subcommand("analyze", "Analytic sweeps as CSV");
  analyze->require_subcommand(1);

  TradeoffOptions tradeoff;
  auto* tradeoff_cmd = analyze->add_subcommand("tradeoff", "Decision and error rate versus threshold");
  tradeoff_cmd->add_option("--snr-db", tradeoff.snr_db, "Receiver SNRs in dB")->capture_default_str();
  tradeoff_cmd->add_option("--m-min", tradeoff.m_min, "First threshold")->capture_default_str();
  tradeoff_cmd->add_option("--m-max", tradeoff.m_max, "Last threshold")->capture_default_str();
  tradeoff_cmd->add_option("--m-step", tradeoff.m_step, "Threshold step")->capture_default_str();
  tradeoff_cmd->add_option("-o,--output", tradeoff.output, "CSV path (default stdout)");

  BoundaryOptions boundary;
  auto* boundary_cmd = analyze->add_subcommand("boundary", "Minimum Eve error rate for R >= level");
  boundary_cmd->add_option("--r-levels", boundary.rate_levels, "Translucent R levels")
      ->capture_default_str();
  boundary_cmd->add_option("--opaque-eb", boundary.opaque_bob_errors,
                           "Opaque lines: Bob error rate without eavesdropping")
      ->capture_default_str();
  boundary_cmd->add_option("--eb-max", boundary.eb_max, "Largest e_B on the grid")->capture_default_str();
  boundary_cmd->add_option("--eb-step", boundary.eb_step, "e_B grid step")->capture_default_str();
  boundary_cmd->add_option("-o,--output", boundary.output, "CSV path (default stdout)");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo session through privacy amplification");
  sim_cmd->add_option("--snr-db", sim.snr_db, "Bob's receiver SNR in dB")->capture_default_str();
  sim_cmd->add_option("--eve-snr-db", sim.eve_snr_db,
                      "Eve's receiver SNR in dB (default: what the tap or link gives her)");
  sim_cmd->add_option("--threshold-m", sim.threshold_m, "Bob's threshold in units of S")
      ->capture_default_str();
  sim_cmd->add_option("--eve-threshold-m", sim.eve_threshold_m, "Eve's threshold")->capture_default_str();
  sim_cmd->add_option("--n-bits", sim.n_bits, "Raw bits sent")->capture_default_str();
  sim_cmd->add_option("--attack", sim.attack, "none | translucent | opaque")
      ->check(CLI::IsMember({"none", "translucent", "opaque"}))
      ->capture_default_str();
  sim_cmd->add_option("--tap-fraction", sim.tap_fraction, "Translucent: power fraction to Eve")
      ->capture_default_str();
  sim_cmd->add_option("--eta", sim.eta, "Opaque: interception probability")->capture_default_str();
  sim_cmd->add_option("--cheat-gamma", sim.cheat_gamma, "Opaque: resend amplitude divisor");
  sim_cmd->add_option("--relay-noise-sigma", sim.relay_noise_sigma, "Opaque: resend hop noise")
      ->capture_default_str();
  sim_cmd->add_option("--monitor-sigma", sim.monitor_sigma,
                      "Intensity monitor noise (default: Bob's noise)");
  sim_cmd->add_option("--regime", sim.regime, "thermal | shot")
      ->check(CLI::IsMember({"thermal", "shot"}))
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "RNG seed (generated and printed when absent)");
  sim_cmd->add_option("--n-s", sim.n_s, "Privacy amplification safety bits")->capture_default_str();
  sim_cmd->add_flag("--fixed-pattern", sim.fixed_pattern, "Alice sends 1010... instead of random bits");
  sim_cmd->add_option("--report", sim.report, "JSON report path (default stdout)");
  sim_cmd->add_option("--alice-key", sim.alice_key, "Alice's final key (hex), secure runs only");
  sim_cmd->add_option("--bob-key", sim.bob_key, "Bob's final key (hex), secure runs only");
  sim_cmd->add_option("--transcript", sim.transcript, "Per-bit CSV: index,sent,voltage,outcome");
  sim_cmd->add_option("--public-log", sim.public_log, "Public channel messages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*sim_cmd) return cmd_simulate(sim);
    if (*tradeoff_cmd) return cmd_tradeoff(tradeoff);
    if (*boundary_cmd) return cmd_boundary(boundary);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "ykdist: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "ykdist: error: " << e.what() << '\n';
    return kInternal;
  }
}
