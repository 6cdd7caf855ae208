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

#include "ykdist/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ykdist {

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::domain_error("beta must be positive and finite");
  }
}

}  // namespace

ThresholdPolicy::ThresholdPolicy(double m) : m_(m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw std::domain_error("threshold m must be >= 0");
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Zero:
      return "0";
    case Decision::One:
      return "1";
    case Decision::Inconclusive:
      return "?";
  }
  return "?";
}

int decision_bit(Decision d) {
  if (d == Decision::Inconclusive) throw std::logic_error("inconclusive decision has no bit");
  return d == Decision::Zero ? 0 : 1;
}

Decision decision_for_bit(int bit) { return bit == 0 ? Decision::Zero : Decision::One; }

Decision decide(double voltage, double mean_voltage, ThresholdPolicy policy) {
  const double threshold = policy.m() * mean_voltage;
  if (voltage > threshold) return Decision::Zero;
  if (voltage < -threshold) return Decision::One;
  return Decision::Inconclusive;
}

Probability decision_rate_analytic(double beta, double m) {
  check_beta(beta);
  static_cast<void>(ThresholdPolicy(m));
  const double f = q_function((m + 1.0) * beta) + q_function((m - 1.0) * beta);
  return Probability(std::min(f, 1.0));
}

Probability error_rate_analytic(double beta, double m) {
  check_beta(beta);
  static_cast<void>(ThresholdPolicy(m));
  const double wrong = q_function((m + 1.0) * beta);
  const double right = q_function((m - 1.0) * beta);
  // Both tails underflow only deep in the high-threshold regime, where the
  // ratio tends to zero.
  if (wrong + right == 0.0) return Probability(0.0);
  return Probability(wrong / (wrong + right));
}

double DecisionStats::decision_rate() const {
  if (n_raw == 0) return 0.0;
  return static_cast<double>(n_sifted) / static_cast<double>(n_raw);
}

double DecisionStats::error_rate() const {
  if (n_sifted == 0) return 0.0;
  return static_cast<double>(n_errors) / static_cast<double>(n_sifted);
}

}  // namespace ykdist
