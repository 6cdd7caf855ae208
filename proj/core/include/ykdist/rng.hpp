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

#ifndef YKDIST_RNG_HPP_
#define YKDIST_RNG_HPP_

#include <cstdint>
#include <random>

namespace ykdist {

/// Explicitly seeded random source. Every stochastic operation takes one of
/// these by reference; a session owns its generator.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform bit in {0, 1}.
  int bit() { return static_cast<int>(engine_() >> 63); }
  std::uint64_t next_u64() { return engine_(); }
  /// Zero-mean Gaussian with standard deviation `sigma` (sigma may be 0).
  double gaussian(double sigma);
  bool bernoulli(double p);
  /// Uniform index in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Derives an independent child generator (e.g. for an attack sub-stream).
  SeededRng fork();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Seed from the system entropy source, for runs where the caller gave none.
std::uint64_t fresh_seed();

}  // namespace ykdist

#endif  // YKDIST_RNG_HPP_
