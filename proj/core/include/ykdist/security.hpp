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

// Closed-form security quantities: the compression fraction tau, the secure
// key rate R per sifted bit, the minimum Eve error rate that keeps R >= 0,
// SNR requirements, and link-budget arithmetic.
//
// Eve's error rate and SNR are related by e_E = Q(beta_E), i.e. Eve always
// decides with a zero threshold. SNR values are beta^2.

#ifndef YKDIST_SECURITY_HPP_
#define YKDIST_SECURITY_HPP_

#include <optional>

#include "ykdist/adversary.hpp"
#include "ykdist/mathkit.hpp"
#include "ykdist/signal_model.hpp"

namespace ykdist {

/// Per-configuration security summary.
struct RateReport {
  double e_B = 0.0;
  double e_E = 0.5;
  double F_plus = 0.0;
  double I_AB = 0.0;
  double tau = 0.0;
  /// I_AB - (1 - e_B) tau - e_B; negative means insecure.
  double R = 0.0;
  /// F_plus * R: secure bits per transmitted bit.
  double throughput_fraction = 0.0;
};

RateReport make_rate_report(double e_B, double e_E, double F_plus, double tau);

/// tau = 1 + log2(sum_{k,l} p(k,l)^2 / p(k)), with p(k) Bob's marginal.
/// Throws std::domain_error on a zero marginal or an invalid distribution.
double tau_from_joint(const JointDistribution& joint);

/// Translucent-attack closed form 1 + log2(1 - 2 e_E + 2 e_E^2).
double tau_translucent(double eve_error);

/// R = I_AB(e_B) - (1 - e_B) tau - e_B.
double secure_rate(double bob_error, double tau);

/// Bisection tolerance on Eve's error rate for the boundary solvers.
inline constexpr double kBoundaryTolerance = 1e-6;

/// Smallest e_E in [0, 1/2] with secure_rate(e_B, tau_translucent(e_E)) >=
/// target_rate. Empty when even e_E = 1/2 falls short.
std::optional<double> boundary_eve_error(double bob_error, double target_rate = 0.0);

/// Opaque-attack boundary. For each candidate e_E the interception fraction
/// is fixed by e_B -> e_B', tau comes from the opaque joint distribution, and
/// R is evaluated at e_B'. Empty when no e_E <= 1/2 reaches R >= 0.
/// Throws std::domain_error unless 0 <= e_B <= e_B' < 1/2.
std::optional<double> boundary_eve_error_opaque(double bob_error, double bob_error_observed);

/// SNR of a zero-threshold receiver with error rate `error_rate`: Q^-1(e)^2.
SnrValue snr_for_zero_threshold_error(double error_rate);

struct BobRequirement {
  SnrValue snr;
  double beta;
  double m;
};

/// Solves Q((m+1) beta) = e F and Q((m-1) beta) = (1 - e) F for (beta, m).
/// Empty when the pair needs a negative threshold.
/// Throws std::domain_error unless 0 < e < 1/2 and 0 < F <= 1.
std::optional<BobRequirement> required_bob_snr(double error_rate, double decision_rate);

/// 10 log10(eve / bob).
double snr_ratio_db(SnrValue eve, SnrValue bob);

struct SnrTolerance {
  double db = 0.0;
  double eve_error_min = 0.0;
  /// Largest Eve SNR that still leaves R >= 0; empty when Eve may have any SNR.
  std::optional<SnrValue> eve_max;
  SnrValue bob_min;
  double bob_threshold_m = 0.0;
};

/// How far Eve's SNR may exceed Bob's (translucent attack) when Bob runs at
/// error rate e_B and decision rate F. `db` is +infinity when the boundary
/// is e_E = 0. Empty when either requirement is infeasible.
std::optional<SnrTolerance> snr_tolerance(double bob_error, double decision_rate);

/// Fiber length that consumes an SNR advantage: advantage / (2 loss) for
/// thermal noise, advantage / loss for shot noise.
double distance_limit(double advantage_db, double fiber_loss_db_per_km, NoiseRegime regime);

/// Secure bits per second: F_plus * max(R, 0) * clock.
double throughput(double decision_rate, double rate, double clock_bits_per_s);
/// Same, from the product F_plus * R directly.
double throughput(double secure_fraction, double clock_bits_per_s);

struct AmplifierPenalty {
  double penalty_db = 0.0;
  /// Thermal-noise-limited links gain from amplification instead.
  bool thermal_gain = false;
};

/// 3 dB per ideal amplifier in the shot-noise limit.
AmplifierPenalty amplifier_penalty(int n_amplifiers, NoiseRegime regime);

}  // namespace ykdist

#endif  // YKDIST_SECURITY_HPP_
