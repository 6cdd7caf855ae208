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

// Full key-distribution run as an experimenter sees it:
//
//   session -> sift -> measured e_B, e_E -> analytic R gate
//           -> Cascade -> empirical p(k,l) -> tau, R -> Toeplitz hash
//
// A run stops at the first gate that fails and never produces key material
// on a non-secure outcome.

#ifndef YKDIST_SIMULATION_HPP_
#define YKDIST_SIMULATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ykdist/adversary.hpp"
#include "ykdist/bit_string.hpp"
#include "ykdist/privacy_amplification.hpp"
#include "ykdist/reconciliation.hpp"
#include "ykdist/security.hpp"
#include "ykdist/session.hpp"

namespace ykdist {

struct SimulationConfig {
  SessionConfig session;
  std::size_t safety_bits = kDefaultSafetyBits;
  CascadeOptions cascade;
  double audit_k_sigma = 5.0;
};

enum class SimulationOutcome {
  Secure,
  Insecure,               // R <= 0
  ReconciliationAborted,  // error rate above bound or verification failed
  NoSiftedBits,
  NoSecureKey,            // R > 0 but the hashed key would be empty
};

std::string_view to_string(SimulationOutcome outcome);

struct SimulationResult {
  SimulationOutcome outcome = SimulationOutcome::Insecure;
  std::string detail;
  SessionTranscript transcript;

  /// Measured rates with tau from the empirical joint distribution once
  /// reconciliation has run, else from the analytic chain.
  RateReport report;
  /// tau and R from the closed forms evaluated at the measured error rates.
  double tau_analytic = 0.0;
  double r_analytic = 0.0;
  /// tau from per-bit conditional collision probabilities (log-averaged).
  std::optional<double> tau_collision;
  std::optional<JointDistribution> empirical_joint;
  std::optional<ReconciliationReport> reconciliation;
  AuditResult audit;

  std::size_t final_length = 0;
  BitString alice_key;
  BitString bob_key;

  bool secure() const noexcept { return outcome == SimulationOutcome::Secure; }
};

/// Runs the pipeline. Configuration errors propagate as exceptions; protocol
/// failures are reported through `outcome`.
SimulationResult run_simulation(const SimulationConfig& config, SeededRng& rng);

/// tau from the collision probability of Bob's bit given Eve's value,
/// averaged in the log domain over Eve's values.
double tau_from_conditional_collision(const JointDistribution& joint);

}  // namespace ykdist

#endif  // YKDIST_SIMULATION_HPP_
