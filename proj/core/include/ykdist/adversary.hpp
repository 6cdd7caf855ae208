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

// Eavesdropping strategies and the joint-probability algebra between Bob's
// corrected bits and Eve's guesses.
//
// Translucent: Eve taps part of the optical power and decides with her own
// detector; the light reaching Bob is only attenuated.
// Opaque: Eve takes every photon of an eta fraction of slots, decides, and
// resends her decision. Unintercepted slots reach Bob untouched and Eve's
// value there is a uniform guess.

#ifndef YKDIST_ADVERSARY_HPP_
#define YKDIST_ADVERSARY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ykdist/detection.hpp"
#include "ykdist/rng.hpp"
#include "ykdist/signal_model.hpp"

namespace ykdist {

struct SessionTranscript;

enum class AttackKind { Translucent, Opaque };

std::string_view to_string(AttackKind kind);

struct AttackConfig {
  AttackKind kind = AttackKind::Translucent;
  /// Translucent only: optical power fraction diverted to Eve.
  double tap_fraction = 0.5;
  /// Opaque only: probability that a slot is intercepted.
  double eta = 0.0;
  /// Eve's receiver operating point. Unset: translucent uses the tapped arm
  /// of the link, opaque uses the full link with Bob's detector type.
  std::optional<SignalParams> eve_params;
  ThresholdPolicy eve_policy;
  /// Opaque only: intensity-cheating variant. Eve drops her inconclusive
  /// slots and resends conclusive ones at amplitude S / gamma.
  std::optional<double> cheat_gamma;
  /// Extra Gaussian noise on the Eve -> Bob resend hop; 0 is the ideal relay.
  double relay_noise_sigma = 0.0;

  static AttackConfig translucent(double tap_fraction,
                                  std::optional<SignalParams> eve = std::nullopt);
  static AttackConfig opaque(double eta, std::optional<SignalParams> eve = std::nullopt);
  static AttackConfig opaque_cheating(double eta, double gamma, ThresholdPolicy eve_policy,
                                      std::optional<SignalParams> eve = std::nullopt);

  /// Throws std::domain_error on out-of-range fields or a cheat_gamma on a
  /// translucent attack.
  void validate() const;
};

/// Bob's arm of the link under `attack` (the kept port for translucent).
SignalParams bob_arm(const SignalParams& link, const std::optional<AttackConfig>& attack);
/// Eve's receiver under `attack`.
SignalParams eve_arm(const SignalParams& link, const AttackConfig& attack);

struct EveObservation {
  double voltage;
  Decision decision;
};

/// Eve's independent measurement of one slot on her tap.
EveObservation translucent_eavesdrop(int bit, const SignalParams& eve_receiver,
                                     const AttackConfig& cfg, SeededRng& eve_rng);

struct OpaqueSlot {
  bool intercepted = false;
  /// Eve's measurement (intercepted) or uniform guess (not intercepted).
  Decision eve_decision = Decision::Inconclusive;
  double eve_voltage = 0.0;
  /// What arrives at Bob before his own noise: signed amplitude in volts.
  double bob_signal = 0.0;
  /// Optical amplitude of the slot as sent toward Bob (0 when dropped);
  /// what Bob's intensity monitor measures.
  double bob_amplitude = 0.0;
};

/// One slot of the intercept-resend attack. `bob_signal` is the amplitude
/// Bob's detector would see noiselessly (+-S untouched, Eve's resend, or 0
/// for a dropped slot), with relay-hop noise already added.
OpaqueSlot opaque_eavesdrop(int bit, double bob_mean_voltage, const SignalParams& eve_receiver,
                            const AttackConfig& cfg, SeededRng& eve_rng);

/// Joint distribution p(k, l) of Bob's value k and Eve's value l.
struct JointDistribution {
  double p00 = 0.25;
  double p01 = 0.25;
  double p10 = 0.25;
  double p11 = 0.25;

  double p0() const noexcept { return p00 + p01; }
  double p1() const noexcept { return p10 + p11; }
  double sum() const noexcept { return p00 + p01 + p10 + p11; }

  /// Throws std::domain_error unless cells are in [0, 1] and sum to 1
  /// within `tolerance`.
  void validate(double tolerance = 1e-12) const;
};

/// p(0,0) = p(1,1) = (1 - e_E)/2, p(0,1) = p(1,0) = e_E/2.
JointDistribution joint_probs_translucent(double eve_error);

/// Bob's error rate with an eta fraction of slots intercepted:
/// (1 - eta) e_B + eta [(1 - e_E) e_B + e_E (1 - e_B)].
Probability effective_bob_error(double bob_error, double eve_error, double eta);

/// Interception fraction that raises Bob's error from e_B to e_B'.
/// Throws std::domain_error when no eta in [0, 1] does.
double eta_for_effective_error(double bob_error, double bob_error_observed, double eve_error);

/// Joint distribution over Bob-correct bits under the opaque attack.
JointDistribution joint_probs_opaque(double bob_error, double eve_error, double eta);

/// Estimates p(k, l) from a reconciled transcript: k is the reconciled value
/// and l Eve's value, over sifted positions where Bob's raw decision was
/// correct. Throws EstimationError when there is no Eve data or no overlap.
JointDistribution empirical_joint_probs(const SessionTranscript& transcript);

struct AuditResult {
  std::vector<bool> flagged;
  std::size_t n_flagged = 0;
  double flagged_fraction = 0.0;
  /// Expected flags from noise alone: 2 Q(k) per bit.
  double false_positive_rate = 0.0;
  bool pass = true;
};

/// Per-bit intensity check: flags readings with |I - S| > k * sigma. The
/// summary passes while the flag count stays within the false-positive
/// budget (mean + 5 standard deviations).
AuditResult intensity_audit(std::span<const double> readings, double expected_amplitude,
                            double monitor_sigma, double k_sigma = 5.0);

}  // namespace ykdist

#endif  // YKDIST_ADVERSARY_HPP_
