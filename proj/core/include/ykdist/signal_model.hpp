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

// Physical layer at the decision-variable level: one post-integration
// voltage V = +-S + n per bit, n ~ N(0, sigma^2).

#ifndef YKDIST_SIGNAL_MODEL_HPP_
#define YKDIST_SIGNAL_MODEL_HPP_

#include <string_view>

#include "ykdist/mathkit.hpp"
#include "ykdist/rng.hpp"

namespace ykdist {

/// Thermal: receiver noise independent of optical power (SNR ~ P^2).
/// Shot: noise variance proportional to optical power (SNR ~ P).
enum class NoiseRegime { Thermal, Shot };

std::string_view to_string(NoiseRegime regime);
/// Accepts "thermal" or "shot". Throws std::invalid_argument otherwise.
NoiseRegime parse_noise_regime(std::string_view text);

/// Receiver operating point. `optical_power` is in arbitrary relative units
/// and only matters for power bookkeeping across taps and attenuators.
class SignalParams {
 public:
  /// Throws std::domain_error unless signal, noise and power are positive.
  /// noise_sigma == 0 is allowed and models a noiseless receiver.
  SignalParams(double mean_voltage, double noise_sigma,
               NoiseRegime regime = NoiseRegime::Thermal,
               double optical_power = 1.0);

  /// Operating point with the given SNR (beta^2) and noise level.
  static SignalParams from_snr(SnrValue snr, NoiseRegime regime = NoiseRegime::Thermal,
                               double noise_sigma = 1.0);

  double mean_voltage() const noexcept { return signal_; }
  double noise_sigma() const noexcept { return sigma_; }
  NoiseRegime regime() const noexcept { return regime_; }
  double optical_power() const noexcept { return power_; }
  /// S / sigma; +infinity for a noiseless receiver.
  double beta() const noexcept { return beta_; }
  /// Throws std::domain_error for a noiseless receiver (infinite SNR).
  SnrValue snr() const;

  /// Scales optical power by `factor`, applying the regime's noise rule.
  SignalParams scaled_power(double factor) const;

 private:
  double signal_;
  double sigma_;
  NoiseRegime regime_;
  double power_;
  double beta_;
};

/// Antipodal encoding: 0 -> +1, 1 -> -1.
int encode_bit(int bit);

/// Half-slot intensities of a unipolar Manchester symbol.
struct PulsePair {
  double first_half;
  double second_half;
};

/// 1 -> (ON, OFF), 0 -> (OFF, ON) with ON = 2*S and OFF = 0.
PulsePair manchester_encode(int bit, double mean_voltage);
/// Delayed-difference detector output (second - first) / 2; equals
/// +S for "0" and -S for "1" on noiseless pulses.
double manchester_decode(const PulsePair& pulse);

/// Decision voltage for one bit: encode_bit(bit) * S + N(0, sigma^2).
double transmit(int bit, const SignalParams& params, SeededRng& rng);

struct TapSplit {
  SignalParams kept;
  SignalParams tapped;
};

/// Beam splitter sending `kept_fraction` of the optical power onward and the
/// rest to the tap port. Both ports use the same detector type.
/// Throws std::domain_error unless 0 < kept_fraction < 1.
TapSplit tap(const SignalParams& params, double kept_fraction);

/// Inverse of tap(...).kept: the input that leaves `kept` after the split.
SignalParams tap_input_for(const SignalParams& kept, double kept_fraction);

/// Fiber or attenuator loss. SNR falls by 2*loss_db (thermal) or loss_db
/// (shot). Throws std::domain_error for negative loss.
SignalParams attenuate(const SignalParams& params, double loss_db);

}  // namespace ykdist

#endif  // YKDIST_SIGNAL_MODEL_HPP_
