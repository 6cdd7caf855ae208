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

#ifndef YKDIST_ERRORS_HPP_
#define YKDIST_ERRORS_HPP_

#include <stdexcept>

namespace ykdist {

// Range and precondition violations use std::domain_error and
// std::invalid_argument. The types below are protocol-level failures.

/// Error correction refused or failed (error rate above the feasibility
/// bound, or the post-correction verification hash mismatched).
class ReconciliationAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Privacy amplification would leave fewer than one secure bit.
class NoSecureKey : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough overlapping data to estimate a statistic.
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ykdist

#endif  // YKDIST_ERRORS_HPP_
