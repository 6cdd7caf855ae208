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

#ifndef YKDIST_SESSION_HPP_
#define YKDIST_SESSION_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ykdist/adversary.hpp"
#include "ykdist/bit_string.hpp"
#include "ykdist/detection.hpp"
#include "ykdist/public_channel.hpp"
#include "ykdist/rng.hpp"
#include "ykdist/signal_model.hpp"

namespace ykdist {

enum class AlicePattern {
  Random,
  /// Fixed 1010... string, for reproducing bench statistics only.
  Alternating,
};

struct SessionConfig {
  std::size_t n_bits = 0;
  /// Link at the receiver side, measured with Bob's detector and before any tap.
  SignalParams channel;
  ThresholdPolicy policy;
  std::optional<AttackConfig> attack;
  AlicePattern pattern = AlicePattern::Random;
  /// Noise of Bob's per-bit intensity monitor. Unset: Bob's decision noise.
  std::optional<double> monitor_sigma;
};

/// Record of one run. Sessions fill everything up to the sifted strings; the
/// key-distillation fields are filled by the simulation pipeline.
struct SessionTranscript {
  std::vector<std::uint8_t> alice_bits;
  std::vector<double> bob_voltages;
  std::vector<Decision> bob_outcomes;
  std::vector<double> bob_intensity;

  /// Empty without an attack. For opaque attacks, unintercepted slots hold
  /// Eve's uniform guess and `eve_measured` is 0 there.
  std::vector<Decision> eve_outcomes;
  std::vector<std::uint8_t> eve_measured;

  std::vector<std::size_t> sift_indices;
  std::vector<std::uint8_t> sifted_alice;
  std::vector<std::uint8_t> sifted_bob;

  BitString reconciled_key;
  BitString final_key;
  std::size_t leakage_bits = 0;

  DecisionStats stats;
  /// Over Eve's measured slots: n_sifted counts her conclusive decisions.
  DecisionStats eve_stats;

  double bob_mean_voltage = 0.0;
  double bob_noise_sigma = 0.0;
  double monitor_sigma = 0.0;

  PublicChannel public_log;

  bool has_eve() const noexcept { return !eve_outcomes.empty(); }
};

/// Runs Alice's transmitter, the optional attack and Bob's threshold receiver
/// over `config.n_bits` slots, then sifts over the public channel.
/// Throws std::invalid_argument for n_bits == 0 or an invalid attack.
SessionTranscript run_session(const SessionConfig& config, SeededRng& rng);

struct SiftedPair {
  std::vector<std::uint8_t> alice;
  std::vector<std::uint8_t> bob;
  bool empty() const noexcept { return alice.empty(); }
};

/// Bit pairs at Bob's conclusive positions.
SiftedPair sift(const SessionTranscript& transcript);

/// Debug export: header `index,sent,voltage,outcome`, one row per slot.
void write_transcript(std::ostream& out, const SessionTranscript& transcript);

}  // namespace ykdist

#endif  // YKDIST_SESSION_HPP_
