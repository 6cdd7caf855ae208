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

// Cascade error correction over the public channel.
//
// Alice's string is the reference; Bob flips bits until every block parity
// Alice disclosed matches his. Pass 1 uses contiguous blocks of
// ceil(0.73 / e); each later pass doubles the block size over a fresh public
// shuffle. Fixing a bit re-opens the blocks that contain it in every other
// pass (the cascade), which is processed until no disclosed block is odd.
// A final 64-bit random-subset-parity hash confirms the strings agree.

#ifndef YKDIST_RECONCILIATION_HPP_
#define YKDIST_RECONCILIATION_HPP_

#include <cstddef>

#include "ykdist/bit_string.hpp"
#include "ykdist/public_channel.hpp"
#include "ykdist/rng.hpp"

namespace ykdist {

/// Error rates above this make reconciliation infeasible.
inline constexpr double kMaxReconcilableError = 0.15;

struct CascadeOptions {
  int passes = 4;
  double block_constant = 0.73;
  /// Random-subset parities compared after the last pass; 0 disables.
  int verification_bits = 64;
};

struct ReconciliationReport {
  std::size_t n_sifted = 0;
  std::size_t n_reconciled = 0;
  /// Exactly the number of Parity messages written to the public log.
  std::size_t parity_bits_leaked = 0;
  std::size_t verification_bits_leaked = 0;
  std::size_t errors_corrected = 0;
  /// Post-correction mismatch fraction between the two strings.
  double residual_error = 0.0;
  int passes = 0;
  std::size_t initial_block_size = 0;

  std::size_t total_leaked() const noexcept {
    return parity_bits_leaked + verification_bits_leaked;
  }
};

struct ReconciliationResult {
  BitString alice;
  BitString bob;
  ReconciliationReport report;
};

/// Corrects `bob` toward `alice`.
/// Throws std::invalid_argument for unequal lengths, ReconciliationAborted when
/// `estimated_error` exceeds kMaxReconcilableError or when the verification
/// hash still disagrees after the last pass.
ReconciliationResult error_correct(const BitString& alice, const BitString& bob,
                                   double estimated_error, PublicChannel& log, SeededRng& rng,
                                   const CascadeOptions& options = {});

/// First-pass Cascade block size, ceil(c / e) clamped to [1, n], where e is
/// the estimate raised to a two-sigma upper bound for a sample of n bits.
std::size_t cascade_block_size(double estimated_error, std::size_t n,
                               double block_constant = 0.73);

}  // namespace ykdist

#endif  // YKDIST_RECONCILIATION_HPP_
