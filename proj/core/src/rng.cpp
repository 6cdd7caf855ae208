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

#include "ykdist/rng.hpp"

namespace ykdist {

double SeededRng::gaussian(double sigma) {
  const double z = normal_(engine_);
  return sigma * z;
}

bool SeededRng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  // 53-bit uniform in [0, 1).
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

std::uint64_t SeededRng::uniform_index(std::uint64_t n) {
  std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
  return dist(engine_);
}

SeededRng SeededRng::fork() {
  // splitmix64 finalizer on a fresh draw decorrelates the child seed.
  std::uint64_t z = engine_() + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return SeededRng(z ^ (z >> 31));
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace ykdist
