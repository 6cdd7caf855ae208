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

#include "ykdist/privacy_amplification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ykdist/errors.hpp"

namespace ykdist {

long long AmplificationParams::final_length() const {
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::domain_error("tau must lie in [0, 1]");
  const auto kept = static_cast<long long>(std::floor(tau * static_cast<double>(n_rec)));
  return kept - static_cast<long long>(parity_discount) - static_cast<long long>(safety_bits);
}

Probability collision_probability(std::span<const double> dist) {
  double total = 0.0;
  double squares = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0)) throw std::domain_error("collision_probability: negative probability");
    total += p;
    squares += p * p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::domain_error("collision_probability: distribution does not sum to 1");
  }
  return Probability(std::min(squares, 1.0));
}

BitString toeplitz_seed(const AmplificationParams& params, SeededRng& rng) {
  const long long m = params.final_length();
  if (m < 1) throw NoSecureKey("no secure key extractable");
  return BitString::random(params.n_rec + static_cast<std::size_t>(m) - 1, rng);
}

BitString privacy_amplify(const BitString& reconciled_key, const AmplificationParams& params,
                          const BitString& seed) {
  const long long m_signed = params.final_length();
  if (m_signed < 1) throw NoSecureKey("no secure key extractable");
  const std::size_t n = params.n_rec;
  const auto m = static_cast<std::size_t>(m_signed);
  if (reconciled_key.size() != n) {
    throw std::invalid_argument("privacy_amplify: key length differs from n_rec");
  }
  if (seed.size() != n + m - 1) {
    throw std::invalid_argument("privacy_amplify: Toeplitz seed must have n_rec + final_length - 1 bits");
  }

  // Output bit i = sum_j seed[i + n - 1 - j] x[j] = sum_k seed[i + k] y[k] with
  // y the reversed key, so every row is a sliding window of the seed.
  BitString reversed(n);
  for (std::size_t j = 0; j < n; ++j) reversed.set(n - 1 - j, reconciled_key.get(j));
  const auto y = reversed.words();

  BitString out(m);
  for (std::size_t i = 0; i < m; ++i) {
    unsigned parity = 0;
    for (std::size_t w = 0; w < y.size(); ++w) {
      parity ^= static_cast<unsigned>(std::popcount(seed.window(i + 64 * w) & y[w]));
    }
    out.set(i, static_cast<int>(parity & 1U));
  }
  return out;
}

double eve_information_bound(std::size_t safety_bits) {
  return std::exp2(-static_cast<double>(safety_bits)) / std::numbers::ln2;
}

}  // namespace ykdist
