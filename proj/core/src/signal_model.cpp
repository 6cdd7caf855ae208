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

#include "ykdist/signal_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ykdist {

std::string_view to_string(NoiseRegime regime) {
  return regime == NoiseRegime::Thermal ? "thermal" : "shot";
}

NoiseRegime parse_noise_regime(std::string_view text) {
  if (text == "thermal") return NoiseRegime::Thermal;
  if (text == "shot") return NoiseRegime::Shot;
  throw std::invalid_argument("unknown noise regime: " + std::string(text));
}

SignalParams::SignalParams(double mean_voltage, double noise_sigma, NoiseRegime regime,
                           double optical_power)
    : signal_(mean_voltage), sigma_(noise_sigma), regime_(regime), power_(optical_power) {
  if (!(mean_voltage > 0.0) || !std::isfinite(mean_voltage)) {
    throw std::domain_error("mean signal voltage must be positive and finite");
  }
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    throw std::domain_error("noise sigma must be non-negative and finite");
  }
  if (!(optical_power > 0.0)) throw std::domain_error("optical power must be positive");
  beta_ = noise_sigma == 0.0 ? std::numeric_limits<double>::infinity()
                             : mean_voltage / noise_sigma;
}

SignalParams SignalParams::from_snr(SnrValue snr, NoiseRegime regime, double noise_sigma) {
  if (!(noise_sigma > 0.0)) throw std::domain_error("from_snr needs a positive noise sigma");
  return SignalParams(snr.beta() * noise_sigma, noise_sigma, regime);
}

SnrValue SignalParams::snr() const {
  if (sigma_ == 0.0) throw std::domain_error("noiseless receiver has no finite SNR");
  return SnrValue::from_beta(beta_);
}

SignalParams SignalParams::scaled_power(double factor) const {
  if (!(factor > 0.0)) throw std::domain_error("power scale factor must be positive");
  // Direct detection: voltage tracks optical power.
  const double signal = signal_ * factor;
  const double sigma = regime_ == NoiseRegime::Thermal ? sigma_ : sigma_ * std::sqrt(factor);
  return SignalParams(signal, sigma, regime_, power_ * factor);
}

int encode_bit(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  return bit == 0 ? 1 : -1;
}

PulsePair manchester_encode(int bit, double mean_voltage) {
  const double on = 2.0 * mean_voltage;
  if (encode_bit(bit) > 0) return {0.0, on};
  return {on, 0.0};
}

double manchester_decode(const PulsePair& pulse) {
  return 0.5 * (pulse.second_half - pulse.first_half);
}

double transmit(int bit, const SignalParams& params, SeededRng& rng) {
  return encode_bit(bit) * params.mean_voltage() + rng.gaussian(params.noise_sigma());
}

TapSplit tap(const SignalParams& params, double kept_fraction) {
  if (!(kept_fraction > 0.0 && kept_fraction < 1.0)) {
    throw std::domain_error("tap power fraction must lie in (0, 1)");
  }
  return {params.scaled_power(kept_fraction), params.scaled_power(1.0 - kept_fraction)};
}

SignalParams tap_input_for(const SignalParams& kept, double kept_fraction) {
  if (!(kept_fraction > 0.0 && kept_fraction <= 1.0)) {
    throw std::domain_error("tap power fraction must lie in (0, 1]");
  }
  return kept.scaled_power(1.0 / kept_fraction);
}

SignalParams attenuate(const SignalParams& params, double loss_db) {
  if (!(loss_db >= 0.0)) throw std::domain_error("attenuation must be non-negative");
  if (loss_db == 0.0) return params;
  return params.scaled_power(std::pow(10.0, -loss_db / 10.0));
}

}  // namespace ykdist
