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

#ifndef YKDIST_MATHKIT_HPP_
#define YKDIST_MATHKIT_HPP_

namespace ykdist {

/// A probability value, checked to lie in [0, 1] on construction.
///
/// Converts implicitly to double so it can be used directly in arithmetic.
class Probability {
 public:
  constexpr Probability() = default;
  /// Throws std::domain_error when `value` is NaN or outside [0, 1].
  explicit Probability(double value);

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }  // NOLINT

 private:
  double value_ = 0.0;
};

/// Signal-to-noise power ratio. The linear value is beta^2 with beta = S/sigma;
/// the dB value is 10*log10 of the linear value.
class SnrValue {
 public:
  /// 0 dB.
  SnrValue() = default;
  static SnrValue from_linear(double linear);
  static SnrValue from_db(double db);
  /// SNR of a receiver with amplitude ratio beta = S/sigma.
  static SnrValue from_beta(double beta);

  double linear() const noexcept { return linear_; }
  double db() const noexcept { return db_; }
  double beta() const noexcept;

 private:
  SnrValue(double linear, double db) : linear_(linear), db_(db) {}
  double linear_ = 1.0;
  double db_ = 0.0;
};

double to_db(double linear);
double from_db(double db);

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
/// Throws std::domain_error for non-finite x.
Probability q_function(double x);

/// Inverse of q_function on the open interval (0, 1).
/// Throws std::domain_error for p outside (0, 1).
double q_inverse(double p);

/// H2(p) = -p log2 p - (1-p) log2(1-p), with 0 log 0 = 0.
double binary_entropy(double p);

/// Mutual information of a binary symmetric channel with error rate
/// `error_rate`, evaluated directly as 1 + e log2 e + (1-e) log2(1-e).
/// Throws std::domain_error for error_rate outside [0, 1/2].
double mutual_information(double error_rate);

}  // namespace ykdist

#endif  // YKDIST_MATHKIT_HPP_
