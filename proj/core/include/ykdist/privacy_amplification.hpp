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

#ifndef YKDIST_PRIVACY_AMPLIFICATION_HPP_
#define YKDIST_PRIVACY_AMPLIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "ykdist/bit_string.hpp"
#include "ykdist/mathkit.hpp"
#include "ykdist/rng.hpp"

namespace ykdist {

inline constexpr std::size_t kDefaultSafetyBits = 30;

/// Sizing of the hashed key: floor(tau * n_rec) - parity_discount - safety_bits.
/// `tau` is the fraction of the reconciled key that survives compression.
struct AmplificationParams {
  double tau = 1.0;
  std::size_t n_rec = 0;
  /// Bits disclosed during reconciliation, removed from the output length.
  std::size_t parity_discount = 0;
  std::size_t safety_bits = kDefaultSafetyBits;

  /// May be zero or negative; privacy_amplify refuses anything below 1.
  long long final_length() const;
};

/// Sum of squared probabilities. Throws std::domain_error if `dist` has a
/// negative entry or does not sum to 1 within 1e-9.
Probability collision_probability(std::span<const double> dist);

/// Toeplitz matrix seed for hashing n_rec bits down to final_length bits:
/// n_rec + final_length - 1 uniform bits.
BitString toeplitz_seed(const AmplificationParams& params, SeededRng& rng);

/// Hashes `reconciled_key` with the Toeplitz matrix T[i][j] = seed[i - j + n - 1].
/// Throws NoSecureKey when final_length() < 1, std::invalid_argument when the
/// key or seed length does not match `params`.
BitString privacy_amplify(const BitString& reconciled_key, const AmplificationParams& params,
                          const BitString& seed);

/// Upper bound on Eve's Shannon information about the final key:
/// 2^-n_S / ln 2 bits.
double eve_information_bound(std::size_t safety_bits);

}  // namespace ykdist

#endif  // YKDIST_PRIVACY_AMPLIFICATION_HPP_
