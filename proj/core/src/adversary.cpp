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

#include "ykdist/adversary.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ykdist/errors.hpp"
#include "ykdist/session.hpp"

namespace ykdist {

namespace {

void check_error_rate(double e, const char* name) {
  if (!(e >= 0.0 && e <= 0.5)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1/2]");
  }
}

void check_fraction(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

std::string_view to_string(AttackKind kind) {
  return kind == AttackKind::Translucent ? "translucent" : "opaque";
}

AttackConfig AttackConfig::translucent(double tap_fraction, std::optional<SignalParams> eve) {
  AttackConfig cfg;
  cfg.kind = AttackKind::Translucent;
  cfg.tap_fraction = tap_fraction;
  cfg.eve_params = std::move(eve);
  cfg.validate();
  return cfg;
}

AttackConfig AttackConfig::opaque(double eta, std::optional<SignalParams> eve) {
  AttackConfig cfg;
  cfg.kind = AttackKind::Opaque;
  cfg.eta = eta;
  cfg.eve_params = std::move(eve);
  cfg.validate();
  return cfg;
}

AttackConfig AttackConfig::opaque_cheating(double eta, double gamma, ThresholdPolicy eve_policy,
                                           std::optional<SignalParams> eve) {
  AttackConfig cfg = opaque(eta, std::move(eve));
  cfg.cheat_gamma = gamma;
  cfg.eve_policy = eve_policy;
  cfg.validate();
  return cfg;
}

void AttackConfig::validate() const {
  if (!(relay_noise_sigma >= 0.0)) throw std::domain_error("relay noise sigma must be >= 0");
  if (kind == AttackKind::Translucent) {
    if (!(tap_fraction > 0.0 && tap_fraction < 1.0)) {
      throw std::domain_error("tap fraction must lie in (0, 1)");
    }
    if (cheat_gamma) throw std::domain_error("cheat_gamma applies to opaque attacks only");
    return;
  }
  check_fraction(eta, "eta");
  if (cheat_gamma && !(*cheat_gamma > 0.0 && *cheat_gamma <= 1.0)) {
    throw std::domain_error("cheat_gamma must lie in (0, 1]");
  }
}

SignalParams bob_arm(const SignalParams& link, const std::optional<AttackConfig>& attack) {
  if (attack && attack->kind == AttackKind::Translucent) {
    return tap(link, 1.0 - attack->tap_fraction).kept;
  }
  return link;
}

SignalParams eve_arm(const SignalParams& link, const AttackConfig& attack) {
  if (attack.eve_params) return *attack.eve_params;
  if (attack.kind == AttackKind::Translucent) return tap(link, 1.0 - attack.tap_fraction).tapped;
  return link;
}

EveObservation translucent_eavesdrop(int bit, const SignalParams& eve_receiver,
                                     const AttackConfig& cfg, SeededRng& eve_rng) {
  const double v = transmit(bit, eve_receiver, eve_rng);
  return {v, decide(v, eve_receiver.mean_voltage(), cfg.eve_policy)};
}

OpaqueSlot opaque_eavesdrop(int bit, double bob_mean_voltage, const SignalParams& eve_receiver,
                            const AttackConfig& cfg, SeededRng& eve_rng) {
  OpaqueSlot slot;
  slot.intercepted = eve_rng.bernoulli(cfg.eta);
  if (!slot.intercepted) {
    slot.eve_decision = decision_for_bit(eve_rng.bit());
    slot.bob_signal = encode_bit(bit) * bob_mean_voltage;
    slot.bob_amplitude = bob_mean_voltage;
    return slot;
  }
  slot.eve_voltage = transmit(bit, eve_receiver, eve_rng);
  slot.eve_decision = decide(slot.eve_voltage, eve_receiver.mean_voltage(), cfg.eve_policy);
  const double hop_noise = eve_rng.gaussian(cfg.relay_noise_sigma);
  if (slot.eve_decision == Decision::Inconclusive) {
    if (cfg.cheat_gamma) {
      slot.bob_signal = hop_noise;  // dropped slot
      return slot;
    }
    // Eve must still fill the slot at full intensity; she sends a guess.
    slot.bob_signal = encode_bit(eve_rng.bit()) * bob_mean_voltage + hop_noise;
    slot.bob_amplitude = bob_mean_voltage;
    return slot;
  }
  const double amplitude = bob_mean_voltage / cfg.cheat_gamma.value_or(1.0);
  slot.bob_signal = encode_bit(decision_bit(slot.eve_decision)) * amplitude + hop_noise;
  slot.bob_amplitude = amplitude;
  return slot;
}

void JointDistribution::validate(double tolerance) const {
  for (double p : {p00, p01, p10, p11}) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("joint probability out of [0, 1]");
  }
  if (std::abs(sum() - 1.0) > tolerance) throw std::domain_error("joint distribution not normalized");
}

JointDistribution joint_probs_translucent(double eve_error) {
  check_error_rate(eve_error, "Eve's error rate");
  const double agree = 0.5 * (1.0 - eve_error);
  const double disagree = 0.5 * eve_error;
  return {agree, disagree, disagree, agree};
}

Probability effective_bob_error(double bob_error, double eve_error, double eta) {
  check_error_rate(bob_error, "Bob's error rate");
  check_error_rate(eve_error, "Eve's error rate");
  check_fraction(eta, "eta");
  const double intercepted = (1.0 - eve_error) * bob_error + eve_error * (1.0 - bob_error);
  return Probability((1.0 - eta) * bob_error + eta * intercepted);
}

double eta_for_effective_error(double bob_error, double bob_error_observed, double eve_error) {
  check_error_rate(bob_error, "Bob's error rate");
  check_error_rate(eve_error, "Eve's error rate");
  check_error_rate(bob_error_observed, "Bob's observed error rate");
  const double excess = bob_error_observed - bob_error;
  if (excess == 0.0) return 0.0;
  const double slope = eve_error * (1.0 - 2.0 * bob_error);
  if (slope <= 0.0) throw std::domain_error("no interception fraction produces this error rate");
  double eta = excess / slope;
  if (eta > 1.0 && eta < 1.0 + 1e-12) eta = 1.0;  // rounding at full interception
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("required interception fraction outside [0, 1]");
  }
  return eta;
}

JointDistribution joint_probs_opaque(double bob_error, double eve_error, double eta) {
  const double observed = effective_bob_error(bob_error, eve_error, eta);
  const double denom = 2.0 * (1.0 - observed);
  if (!(denom > 0.0)) throw std::domain_error("degenerate effective error rate e_B' = 1");
  const double agree = ((1.0 - eve_error) * eta + 0.5 * (1.0 - eta)) * (1.0 - bob_error) / denom;
  const double disagree =
      (bob_error * eve_error * eta + 0.5 * (1.0 - bob_error) * (1.0 - eta)) / denom;
  JointDistribution j{agree, disagree, disagree, agree};
  j.validate(1e-9);
  return j;
}

JointDistribution empirical_joint_probs(const SessionTranscript& transcript) {
  if (!transcript.has_eve()) throw EstimationError("transcript has no eavesdropper data");
  const std::size_t n = transcript.sift_indices.size();
  if (transcript.reconciled_key.size() != n) {
    throw EstimationError("joint estimation needs a reconciled key over all sifted positions");
  }
  std::array<std::size_t, 4> counts{};
  std::size_t total = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const int k = transcript.reconciled_key.get(s);
    if (transcript.sifted_bob[s] != k) continue;  // Bob-correct bits only
    const Decision eve = transcript.eve_outcomes[transcript.sift_indices[s]];
    if (!is_conclusive(eve)) continue;
    ++counts[static_cast<std::size_t>(2 * k + decision_bit(eve))];
    ++total;
  }
  if (total == 0) throw EstimationError("no overlapping conclusive Bob/Eve data");
  const double t = static_cast<double>(total);
  return {counts[0] / t, counts[1] / t, counts[2] / t, counts[3] / t};
}

AuditResult intensity_audit(std::span<const double> readings, double expected_amplitude,
                            double monitor_sigma, double k_sigma) {
  if (!(monitor_sigma > 0.0)) throw std::domain_error("monitor sigma must be positive");
  if (!(k_sigma > 0.0)) throw std::domain_error("audit tolerance must be positive");
  AuditResult result;
  result.flagged.resize(readings.size());
  const double limit = k_sigma * monitor_sigma;
  for (std::size_t i = 0; i < readings.size(); ++i) {
    const bool bad = std::abs(readings[i] - expected_amplitude) > limit;
    result.flagged[i] = bad;
    result.n_flagged += bad ? 1 : 0;
  }
  const double n = static_cast<double>(readings.size());
  result.false_positive_rate = 2.0 * q_function(k_sigma);
  if (!readings.empty()) result.flagged_fraction = static_cast<double>(result.n_flagged) / n;
  const double p = result.false_positive_rate;
  const double budget = n * p + 5.0 * std::sqrt(n * p * (1.0 - p)) + 1.0;
  result.pass = static_cast<double>(result.n_flagged) <= budget;
  return result;
}

}  // namespace ykdist
