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

#include "ykdist/security.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace ykdist {

namespace {

// Smallest x in [lo, hi] with rate(x) >= target, for rate increasing in x.
std::optional<double> bisect_min(const std::function<double(double)>& rate, double lo, double hi,
                                 double target) {
  if (rate(lo) >= target) return lo;
  if (rate(hi) < target) return std::nullopt;
  while (hi - lo > 0.1 * kBoundaryTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (rate(mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

RateReport make_rate_report(double e_B, double e_E, double F_plus, double tau) {
  RateReport r;
  r.e_B = e_B;
  r.e_E = e_E;
  r.F_plus = F_plus;
  r.I_AB = mutual_information(e_B);
  r.tau = tau;
  r.R = r.I_AB - (1.0 - e_B) * tau - e_B;
  r.throughput_fraction = F_plus * r.R;
  return r;
}

double tau_from_joint(const JointDistribution& joint) {
  joint.validate(1e-9);
  const double p0 = joint.p0();
  const double p1 = joint.p1();
  if (p0 <= 0.0 || p1 <= 0.0) throw std::domain_error("tau_from_joint: zero marginal p(k)");
  const double sum = (joint.p00 * joint.p00 + joint.p01 * joint.p01) / p0 +
                     (joint.p10 * joint.p10 + joint.p11 * joint.p11) / p1;
  return 1.0 + std::log2(sum);
}

double tau_translucent(double eve_error) {
  if (!(eve_error >= 0.0 && eve_error <= 0.5)) {
    throw std::domain_error("tau_translucent: e_E must lie in [0, 1/2]");
  }
  return 1.0 + std::log2(1.0 - 2.0 * eve_error + 2.0 * eve_error * eve_error);
}

double secure_rate(double bob_error, double tau) {
  if (!(tau >= -1e-12 && tau <= 1.0 + 1e-12)) throw std::domain_error("secure_rate: tau out of [0, 1]");
  return mutual_information(bob_error) - (1.0 - bob_error) * tau - bob_error;
}

std::optional<double> boundary_eve_error(double bob_error, double target_rate) {
  if (!(bob_error >= 0.0 && bob_error < 0.5)) {
    throw std::domain_error("boundary_eve_error: e_B must lie in [0, 1/2)");
  }
  return bisect_min([bob_error](double e) { return secure_rate(bob_error, tau_translucent(e)); },
                    0.0, 0.5, target_rate);
}

std::optional<double> boundary_eve_error_opaque(double bob_error, double bob_error_observed) {
  if (!(bob_error >= 0.0 && bob_error <= bob_error_observed && bob_error_observed < 0.5)) {
    throw std::domain_error("boundary_eve_error_opaque: need 0 <= e_B <= e_B' < 1/2");
  }
  auto rate = [&](double eve_error) {
    // eta from inverting the effective-error relation; clamped against rounding at eta = 1.
    const double eta = std::min(
        1.0, (bob_error_observed - bob_error) / (eve_error * (1.0 - 2.0 * bob_error)));
    const double tau = tau_from_joint(joint_probs_opaque(bob_error, eve_error, eta));
    return secure_rate(bob_error_observed, tau);
  };
  // Below this error rate Eve cannot raise Bob's errors to e_B' even at eta = 1.
  const double lowest = (bob_error_observed - bob_error) / (1.0 - 2.0 * bob_error);
  if (lowest > 0.5) return std::nullopt;
  if (lowest == 0.0) {
    // e_B' == e_B: no interception, Eve's knowledge is nil.
    return rate(0.5) >= 0.0 ? std::optional<double>(0.0) : std::nullopt;
  }
  return bisect_min(rate, lowest, 0.5, 0.0);
}

SnrValue snr_for_zero_threshold_error(double error_rate) {
  if (!(error_rate > 0.0 && error_rate < 0.5)) {
    throw std::domain_error("zero-threshold SNR needs an error rate in (0, 1/2)");
  }
  return SnrValue::from_beta(q_inverse(error_rate));
}

std::optional<BobRequirement> required_bob_snr(double error_rate, double decision_rate) {
  if (!(error_rate > 0.0 && error_rate < 0.5)) {
    throw std::domain_error("required_bob_snr: e must lie in (0, 1/2)");
  }
  if (!(decision_rate > 0.0 && decision_rate <= 1.0)) {
    throw std::domain_error("required_bob_snr: F must lie in (0, 1]");
  }
  const double wrong = error_rate * decision_rate;
  const double right = (1.0 - error_rate) * decision_rate;
  if (!(right < 1.0)) return std::nullopt;
  const double upper = q_inverse(wrong);  // (m + 1) beta
  const double lower = q_inverse(right);  // (m - 1) beta
  const double beta = 0.5 * (upper - lower);
  if (!(beta > 0.0)) return std::nullopt;
  const double m = 0.5 * (upper + lower) / beta;
  if (m < 0.0) return std::nullopt;
  return BobRequirement{SnrValue::from_beta(beta), beta, m};
}

double snr_ratio_db(SnrValue eve, SnrValue bob) { return eve.db() - bob.db(); }

std::optional<SnrTolerance> snr_tolerance(double bob_error, double decision_rate) {
  const auto bob = required_bob_snr(bob_error, decision_rate);
  if (!bob) return std::nullopt;
  const auto eve_error = boundary_eve_error(bob_error);
  if (!eve_error) return std::nullopt;
  SnrTolerance tol;
  tol.bob_min = bob->snr;
  tol.bob_threshold_m = bob->m;
  tol.eve_error_min = *eve_error;
  if (*eve_error <= 0.0) {
    tol.db = std::numeric_limits<double>::infinity();
    return tol;
  }
  tol.eve_max = snr_for_zero_threshold_error(*eve_error);
  tol.db = snr_ratio_db(*tol.eve_max, tol.bob_min);
  return tol;
}

double distance_limit(double advantage_db, double fiber_loss_db_per_km, NoiseRegime regime) {
  if (!(advantage_db >= 0.0)) throw std::domain_error("distance_limit: advantage must be >= 0 dB");
  if (!(fiber_loss_db_per_km > 0.0)) throw std::domain_error("distance_limit: loss must be > 0");
  const double snr_db_per_km =
      regime == NoiseRegime::Thermal ? 2.0 * fiber_loss_db_per_km : fiber_loss_db_per_km;
  return advantage_db / snr_db_per_km;
}

double throughput(double decision_rate, double rate, double clock_bits_per_s) {
  if (!(decision_rate >= 0.0 && decision_rate <= 1.0)) {
    throw std::domain_error("throughput: decision rate must lie in [0, 1]");
  }
  if (!(clock_bits_per_s >= 0.0)) throw std::domain_error("throughput: clock must be >= 0");
  return decision_rate * std::max(rate, 0.0) * clock_bits_per_s;
}

double throughput(double secure_fraction, double clock_bits_per_s) {
  return throughput(1.0, secure_fraction, clock_bits_per_s);
}

AmplifierPenalty amplifier_penalty(int n_amplifiers, NoiseRegime regime) {
  if (n_amplifiers < 0) throw std::domain_error("amplifier count must be >= 0");
  if (regime == NoiseRegime::Thermal) return {0.0, n_amplifiers > 0};
  return {3.0 * n_amplifiers, false};
}

}  // namespace ykdist
