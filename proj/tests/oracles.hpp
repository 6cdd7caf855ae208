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


// Reference computations for the tests. Nothing here calls into ykdist: the
// point is to reach the same numbers by a different route (quadrature,
// enumeration, textbook root finding, explicit matrices).

#ifndef YKDIST_TESTS_ORACLES_HPP_
#define YKDIST_TESTS_ORACLES_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/tools/roots.hpp>

namespace oracle {

inline double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

/// Gaussian upper tail by quadrature of the density over (x, inf).
inline double q(double x) {
  if (x < 0.0) return 1.0 - q(-x);
  static boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([x](double t) { return phi(t); }, x,
                              std::numeric_limits<double>::infinity(), 1e-15);
}

/// Inverse tail via boost's inverse complementary error function.
inline double q_inv(double p) { return std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p); }

inline double h2(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

/// Probability mass of N(beta, 1) outside [-m beta, m beta] by integrating
/// the density over each tail.
inline double decision_rate(double beta, double m) {
  static boost::math::quadrature::exp_sinh<double> integrator;
  const double inf = std::numeric_limits<double>::infinity();
  const double upper = integrator.integrate([beta](double v) { return phi(v - beta); }, m * beta, inf);
  // Lower tail mirrored: P(V < -m beta) = integral of phi(-w - beta) over w > m beta.
  const double lower = integrator.integrate([beta](double w) { return phi(-w - beta); }, m * beta, inf);
  return upper + lower;
}

inline double error_rate(double beta, double m) {
  static boost::math::quadrature::exp_sinh<double> integrator;
  const double inf = std::numeric_limits<double>::infinity();
  const double lower = integrator.integrate([beta](double w) { return phi(-w - beta); }, m * beta, inf);
  return lower / decision_rate(beta, m);
}

/// p[k][l]: Bob's sifted bit k, Eve's bit l.
using Joint = std::array<std::array<double, 2>, 2>;

/// Enumerates the opaque intercept-resend process: Alice's bit, whether Eve
/// intercepts, Eve's bit, Bob's bit; keeps the events where Bob is right.
inline Joint opaque_joint(double eb, double ee, double eta) {
  Joint p{};
  double kept = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int intercepted = 0; intercepted < 2; ++intercepted) {
      const double p_i = intercepted ? eta : 1.0 - eta;
      for (int l = 0; l < 2; ++l) {
        // Eve measures when intercepting, guesses otherwise.
        const double p_l = intercepted ? (l == a ? 1.0 - ee : ee) : 0.5;
        // Bob's detector sees Eve's resend, or Alice's pulse.
        const int sent_to_bob = intercepted ? l : a;
        for (int k = 0; k < 2; ++k) {
          const double p_k = k == sent_to_bob ? 1.0 - eb : eb;
          const double w = 0.5 * p_i * p_l * p_k;
          if (k == a) {
            p[k][l] += w;
            kept += w;
          }
        }
      }
    }
  }
  for (auto& row : p) {
    for (double& v : row) v /= kept;
  }
  return p;
}

/// Bob's error rate under interception, from the same enumeration.
inline double opaque_bob_error(double eb, double ee, double eta) {
  double wrong = 0.0;
  for (int intercepted = 0; intercepted < 2; ++intercepted) {
    const double p_i = intercepted ? eta : 1.0 - eta;
    for (int eve_right = 0; eve_right < 2; ++eve_right) {
      const double p_e = intercepted ? (eve_right ? 1.0 - ee : ee) : (eve_right ? 1.0 : 0.0);
      const bool resend_right = !intercepted || eve_right;
      wrong += p_i * p_e * (resend_right ? eb : 1.0 - eb);
    }
  }
  return wrong;
}

inline Joint translucent_joint(double ee) {
  return {{{0.5 * (1.0 - ee), 0.5 * ee}, {0.5 * ee, 0.5 * (1.0 - ee)}}};
}

/// 1 + log2 of the expected collision probability of Eve's view given Bob's bit.
inline double tau(const Joint& p) {
  double s = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double pk = p[k][0] + p[k][1];
    for (int l = 0; l < 2; ++l) s += p[k][l] * (p[k][l] / pk);
  }
  return 1.0 + std::log2(s);
}

inline double rate(double eb, double tau) { return (1.0 - h2(eb)) - (1.0 - eb) * tau - eb; }

/// Root of R(e_E) - target by TOMS 748 on [0, 1/2]; NaN when no root brackets.
template <class F>
double root(F f, double lo, double hi) {
  if (f(lo) >= 0.0) return lo;
  if (f(hi) < 0.0) return std::numeric_limits<double>::quiet_NaN();
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(40),
                                                   iters);
  return 0.5 * (r.first + r.second);
}

inline double translucent_boundary(double eb, double target = 0.0) {
  return root([&](double ee) { return rate(eb, tau(translucent_joint(ee))) - target; }, 0.0, 0.5);
}

/// Explicit m x n Toeplitz matrix with T[i][j] = seed[i + n - 1 - j], times x.
inline std::vector<int> toeplitz(const std::vector<int>& seed, const std::vector<int>& x, std::size_t m) {
  const std::size_t n = x.size();
  std::vector<int> out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc ^= seed[i + n - 1 - j] & x[j];
    out[i] = acc;
  }
  return out;
}

/// Standard deviation of a binomial proportion.
inline double binomial_sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

}  // namespace oracle

#endif  // YKDIST_TESTS_ORACLES_HPP_
