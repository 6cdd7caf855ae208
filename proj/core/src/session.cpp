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

#include "ykdist/session.hpp"

#include <ostream>
#include <stdexcept>

namespace ykdist {

SessionTranscript run_session(const SessionConfig& config, SeededRng& rng) {
  if (config.n_bits == 0) throw std::invalid_argument("session needs at least one bit");
  if (config.attack) config.attack->validate();

  // Independent sub-streams, forked in a fixed order, so that Bob's noise
  // does not depend on how many draws the attack consumes.
  SeededRng alice_rng = rng.fork();
  SeededRng bob_rng = rng.fork();
  SeededRng eve_rng = rng.fork();
  SeededRng monitor_rng = rng.fork();

  const SignalParams bob = bob_arm(config.channel, config.attack);
  const std::optional<SignalParams> eve =
      config.attack ? std::optional<SignalParams>(eve_arm(config.channel, *config.attack))
                    : std::nullopt;
  const double s_bob = bob.mean_voltage();

  SessionTranscript t;
  const std::size_t n = config.n_bits;
  t.bob_mean_voltage = s_bob;
  t.bob_noise_sigma = bob.noise_sigma();
  t.monitor_sigma = config.monitor_sigma.value_or(bob.noise_sigma());
  t.alice_bits.resize(n);
  t.bob_voltages.resize(n);
  t.bob_outcomes.resize(n);
  t.bob_intensity.resize(n);
  if (config.attack) {
    t.eve_outcomes.resize(n);
    t.eve_measured.resize(n);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const int bit = config.pattern == AlicePattern::Random ? alice_rng.bit()
                                                           : static_cast<int>((i + 1) % 2);
    t.alice_bits[i] = static_cast<std::uint8_t>(bit);

    double signal = encode_bit(bit) * s_bob;
    double amplitude = s_bob;
    if (config.attack && config.attack->kind == AttackKind::Translucent) {
      const EveObservation obs = translucent_eavesdrop(bit, *eve, *config.attack, eve_rng);
      t.eve_outcomes[i] = obs.decision;
      t.eve_measured[i] = 1;
    } else if (config.attack) {
      const OpaqueSlot slot = opaque_eavesdrop(bit, s_bob, *eve, *config.attack, eve_rng);
      t.eve_outcomes[i] = slot.eve_decision;
      t.eve_measured[i] = slot.intercepted ? 1 : 0;
      signal = slot.bob_signal;
      amplitude = slot.bob_amplitude;
    }

    const double v = signal + bob_rng.gaussian(bob.noise_sigma());
    t.bob_voltages[i] = v;
    t.bob_outcomes[i] = decide(v, s_bob, config.policy);
    t.bob_intensity[i] = amplitude + monitor_rng.gaussian(t.monitor_sigma);
  }

  // Bob announces his conclusive positions.
  t.stats.n_raw = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_conclusive(t.bob_outcomes[i])) continue;
    t.sift_indices.push_back(i);
    const int b = decision_bit(t.bob_outcomes[i]);
    t.sifted_alice.push_back(t.alice_bits[i]);
    t.sifted_bob.push_back(static_cast<std::uint8_t>(b));
    if (b != t.alice_bits[i]) ++t.stats.n_errors;
  }
  t.stats.n_sifted = t.sift_indices.size();
  t.public_log.send(MessageType::SiftIndices,
                    std::vector<std::uint64_t>(t.sift_indices.begin(), t.sift_indices.end()));

  if (t.has_eve()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t.eve_measured[i] == 0) continue;
      ++t.eve_stats.n_raw;
      if (!is_conclusive(t.eve_outcomes[i])) continue;
      ++t.eve_stats.n_sifted;
      if (decision_bit(t.eve_outcomes[i]) != t.alice_bits[i]) ++t.eve_stats.n_errors;
    }
  }
  return t;
}

SiftedPair sift(const SessionTranscript& transcript) {
  SiftedPair out;
  for (std::size_t i = 0; i < transcript.bob_outcomes.size(); ++i) {
    const Decision d = transcript.bob_outcomes[i];
    if (!is_conclusive(d)) continue;
    out.alice.push_back(transcript.alice_bits[i]);
    out.bob.push_back(static_cast<std::uint8_t>(decision_bit(d)));
  }
  return out;
}

void write_transcript(std::ostream& out, const SessionTranscript& transcript) {
  out << "index,sent,voltage,outcome\n";
  const auto old_precision = out.precision(17);
  for (std::size_t i = 0; i < transcript.alice_bits.size(); ++i) {
    out << i << ',' << static_cast<int>(transcript.alice_bits[i]) << ','
        << transcript.bob_voltages[i] << ',' << to_string(transcript.bob_outcomes[i]) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace ykdist
