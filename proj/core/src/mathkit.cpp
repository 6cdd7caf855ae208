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

#include "ykdist/mathkit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ykdist {

namespace {

constexpr double kInverseBracket = 10.0;

// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x) {
  if (x == 0.0) return 0.0;
  return x * std::log2(x);
}

}  // namespace

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error("probability out of [0, 1]: " + std::to_string(value));
  }
}

SnrValue SnrValue::from_linear(double linear) {
  if (!(linear > 0.0) || !std::isfinite(linear)) {
    throw std::domain_error("SNR must be a positive finite power ratio");
  }
  return SnrValue(linear, to_db(linear));
}

SnrValue SnrValue::from_db(double db) {
  if (!std::isfinite(db)) throw std::domain_error("SNR dB value must be finite");
  return SnrValue(ykdist::from_db(db), db);
}

SnrValue SnrValue::from_beta(double beta) {
  if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
  return from_linear(beta * beta);
}

double SnrValue::beta() const noexcept { return std::sqrt(linear_); }

double to_db(double linear) {
  if (!(linear > 0.0)) throw std::domain_error("dB conversion needs a positive ratio");
  return 10.0 * std::log10(linear);
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

Probability q_function(double x) {
  if (!std::isfinite(x)) throw std::domain_error("q_function: non-finite argument");
  return Probability(0.5 * std::erfc(x / std::numbers::sqrt2));
}

double q_inverse(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("q_inverse: p must lie in (0, 1)");
  }
  // Q is decreasing: Q(lo) > p > Q(hi) holds on the bracket for any p that
  // is representable away from 0 and 1 by more than Q(10) ~ 7.6e-24.
  double lo = -kInverseBracket;
  double hi = kInverseBracket;
  double x = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-3; ++i) {
    x = 0.5 * (lo + hi);
    if (q_function(x) > p) {
      lo = x;
    } else {
      hi = x;
    }
  }
  x = 0.5 * (lo + hi);
  // Newton on f(x) = Q(x) - p, f'(x) = -phi(x). Kept inside the bracket.
  for (int i = 0; i < 50; ++i) {
    const double f = q_function(x) - p;
    const double density =
        std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    if (density == 0.0 || f == 0.0) break;
    if (f > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    double next = x + f / density;
    if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(x))) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p out of [0, 1]");
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double mutual_information(double error_rate) {
  if (!(error_rate >= 0.0 && error_rate <= 0.5)) {
    throw std::domain_error("mutual_information: error rate must lie in [0, 1/2]");
  }
  return 1.0 + xlog2x(error_rate) + xlog2x(1.0 - error_rate);
}

}  // namespace ykdist
