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

#ifndef YKDIST_DETECTION_HPP_
#define YKDIST_DETECTION_HPP_

#include <cstddef>
#include <string_view>

#include "ykdist/mathkit.hpp"

namespace ykdist {

/// Threshold V_th = m * S. m = 0 decides every bit.
class ThresholdPolicy {
 public:
  constexpr ThresholdPolicy() = default;
  /// Throws std::domain_error for negative or non-finite m.
  explicit ThresholdPolicy(double m);

  static ThresholdPolicy zero() { return ThresholdPolicy(); }

  double m() const noexcept { return m_; }

 private:
  double m_ = 0.0;
};

enum class Decision : unsigned char { Zero, One, Inconclusive };

std::string_view to_string(Decision d);
inline bool is_conclusive(Decision d) { return d != Decision::Inconclusive; }
/// Bit value of a conclusive decision. Throws std::logic_error on Inconclusive.
int decision_bit(Decision d);
Decision decision_for_bit(int bit);

/// "0" if V > mS, "1" if V < -mS, Inconclusive on the closed interval
/// [-mS, mS].
Decision decide(double voltage, double mean_voltage, ThresholdPolicy policy);

/// F+ = Q((m+1) beta) + Q((m-1) beta).
Probability decision_rate_analytic(double beta, double m);
/// e = Q((m+1) beta) / F+.
Probability error_rate_analytic(double beta, double m);

/// Counts plus derived rates for one receiver.
struct DecisionStats {
  std::size_t n_raw = 0;
  std::size_t n_sifted = 0;
  std::size_t n_errors = 0;  // over sifted positions only

  double decision_rate() const;
  /// Zero when nothing was sifted.
  double error_rate() const;
};

}  // namespace ykdist

#endif  // YKDIST_DETECTION_HPP_
