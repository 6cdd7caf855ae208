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

#include "ykdist/simulation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "ykdist/errors.hpp"

namespace ykdist {

namespace {

double clamp_error(double e) { return std::clamp(e, 0.0, 0.5); }

// Closed-form tau at the measured rates for the configured attack.
double analytic_tau(const SessionConfig& cfg, double eve_error) {
  if (!cfg.attack) return 0.0;
  if (cfg.attack->kind == AttackKind::Translucent) return tau_translucent(eve_error);
  const SignalParams bob = bob_arm(cfg.channel, cfg.attack);
  const double nominal_bob_error =
      std::isfinite(bob.beta()) ? double(error_rate_analytic(bob.beta(), cfg.policy.m())) : 0.0;
  return tau_from_joint(joint_probs_opaque(nominal_bob_error, eve_error, cfg.attack->eta));
}

}  // namespace

std::string_view to_string(SimulationOutcome outcome) {
  switch (outcome) {
    case SimulationOutcome::Secure:
      return "secure";
    case SimulationOutcome::Insecure:
      return "insecure";
    case SimulationOutcome::ReconciliationAborted:
      return "reconciliation_aborted";
    case SimulationOutcome::NoSiftedBits:
      return "no_sifted_bits";
    case SimulationOutcome::NoSecureKey:
      return "no_secure_key";
  }
  return "unknown";
}

double tau_from_conditional_collision(const JointDistribution& joint) {
  joint.validate(1e-9);
  double log_sum = 0.0;
  // Eve's value l: p(l) and the conditional distribution of Bob's bit.
  const std::array<std::array<double, 2>, 2> by_eve = {{{joint.p00, joint.p10},
                                                        {joint.p01, joint.p11}}};
  for (const auto& column : by_eve) {
    const double p_l = column[0] + column[1];
    if (p_l <= 0.0) continue;
    const std::array<double, 2> conditional = {column[0] / p_l, column[1] / p_l};
    log_sum += p_l * std::log2(double(collision_probability(conditional)));
  }
  return 1.0 + log_sum;
}

SimulationResult run_simulation(const SimulationConfig& config, SeededRng& rng) {
  SimulationResult result;
  result.transcript = run_session(config.session, rng);
  SessionTranscript& t = result.transcript;

  const double monitor_sigma = std::max(t.monitor_sigma, 1e-12 * t.bob_mean_voltage);
  result.audit = intensity_audit(t.bob_intensity, t.bob_mean_voltage, monitor_sigma,
                                 config.audit_k_sigma);

  const double bob_error = t.stats.error_rate();
  const double eve_error = t.has_eve() && t.eve_stats.n_sifted > 0 ? t.eve_stats.error_rate() : 0.5;
  const double f_plus = t.stats.decision_rate();

  result.tau_analytic = analytic_tau(config.session, clamp_error(eve_error));
  result.r_analytic = secure_rate(clamp_error(bob_error), result.tau_analytic);
  result.report = make_rate_report(clamp_error(bob_error), eve_error, f_plus, result.tau_analytic);

  if (t.stats.n_sifted == 0) {
    result.outcome = SimulationOutcome::NoSiftedBits;
    result.detail = "no conclusive decisions; nothing to sift";
    return result;
  }
  if (result.r_analytic <= 0.0) {
    result.outcome = SimulationOutcome::Insecure;
    result.detail = "secure key rate R <= 0 at the measured error rates";
    return result;
  }

  const BitString alice_sifted = BitString::from_bits(t.sifted_alice);
  const BitString bob_sifted = BitString::from_bits(t.sifted_bob);
  ReconciliationResult rec;
  try {
    rec = error_correct(alice_sifted, bob_sifted, bob_error, t.public_log, rng, config.cascade);
  } catch (const ReconciliationAborted& e) {
    result.outcome = SimulationOutcome::ReconciliationAborted;
    result.detail = e.what();
    return result;
  }
  result.reconciliation = rec.report;
  t.reconciled_key = rec.bob;
  t.leakage_bits = rec.report.total_leaked();

  double tau = 0.0;
  if (t.has_eve()) {
    try {
      result.empirical_joint = empirical_joint_probs(t);
      tau = tau_from_joint(*result.empirical_joint);
      result.tau_collision = tau_from_conditional_collision(*result.empirical_joint);
    } catch (const EstimationError&) {
      tau = result.tau_analytic;
    } catch (const std::domain_error&) {
      tau = 1.0;  // degenerate joint: assume Eve knows everything
    }
  }
  result.report = make_rate_report(bob_error, eve_error, f_plus, std::clamp(tau, 0.0, 1.0));
  if (result.report.R <= 0.0) {
    result.outcome = SimulationOutcome::Insecure;
    result.detail = "secure key rate R <= 0 from the estimated joint distribution";
    return result;
  }

  AmplificationParams amp;
  amp.tau = 1.0 - result.report.tau;
  amp.n_rec = rec.alice.size();
  amp.parity_discount = t.leakage_bits;
  amp.safety_bits = config.safety_bits;
  if (amp.final_length() < 1) {
    result.outcome = SimulationOutcome::NoSecureKey;
    result.detail = "no secure key extractable after leakage and safety bits";
    return result;
  }
  const BitString seed = toeplitz_seed(amp, rng);
  std::vector<std::uint64_t> payload = {amp.n_rec, static_cast<std::uint64_t>(amp.final_length())};
  payload.insert(payload.end(), seed.words().begin(), seed.words().end());
  t.public_log.send(MessageType::ToeplitzSeed, std::move(payload));

  result.alice_key = privacy_amplify(rec.alice, amp, seed);
  result.bob_key = privacy_amplify(rec.bob, amp, seed);
  result.final_length = result.alice_key.size();
  t.final_key = result.bob_key;
  result.outcome = SimulationOutcome::Secure;
  return result;
}

}  // namespace ykdist
