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


#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ykdist/bit_string.hpp"
#include "ykdist/errors.hpp"
#include "ykdist/mathkit.hpp"
#include "ykdist/privacy_amplification.hpp"
#include "ykdist/public_channel.hpp"
#include "ykdist/reconciliation.hpp"

namespace ykdist {
namespace {

// Bob's copy of `alice` with each bit flipped independently with probability e.
BitString noisy_copy(const BitString& alice, double e, SeededRng& rng) {
  BitString bob = alice;
  for (std::size_t i = 0; i < bob.size(); ++i) {
    if (rng.bernoulli(e)) bob.flip(i);
  }
  return bob;
}

TEST(BitString, BasicsAndHex) {
  BitString b = BitString::from_bits(std::vector<std::uint8_t>{1, 0, 1, 1, 0, 0, 0, 0, 1});
  EXPECT_EQ(b.size(), 9U);
  EXPECT_EQ(b.count_ones(), 4U);
  EXPECT_EQ(b.parity(), 0);
  EXPECT_EQ(b.to_hex(), "b080");
  EXPECT_EQ(BitString::from_hex("b080", 9), b);
  b.push_back(1);
  EXPECT_EQ(b.get(9), 1);
  SeededRng rng(1);
  for (std::size_t n : {1U, 63U, 64U, 65U, 1000U}) {
    const auto r = BitString::random(n, rng);
    EXPECT_EQ(BitString::from_hex(r.to_hex(), n), r);
    EXPECT_EQ(r.to_hex().size(), 2 * ((n + 7) / 8));
    EXPECT_EQ(r.hamming_distance(r), 0U);
    EXPECT_EQ((r ^ r).count_ones(), 0U);
  }
}

TEST(BitString, Window) {
  BitString b(100);
  b.set(70, 1);
  b.set(99, 1);
  EXPECT_EQ(b.window(70), (std::uint64_t{1} << 29) | 1U);
  EXPECT_EQ(b.window(99), 1U);
  EXPECT_EQ(b.window(100), 0U);
}

TEST(PublicChannel, WritesRecords) {
  PublicChannel ch;
  ch.send(MessageType::Parity, {0, 0, 8, 1});
  ch.send(MessageType::VerificationSeed, {42});
  EXPECT_EQ(ch.count(MessageType::Parity), 1U);
  std::ostringstream os;
  ch.write(os);
  EXPECT_EQ(os.str(), "type,payload\nparity,0 0 8 1\nverification_seed,42\n");
}

TEST(Cascade, BlockSize) {
  // 0.73 / (e + 2 sqrt(e (1 - e) / n) + 1 / n)
  EXPECT_EQ(cascade_block_size(0.01, 100000), 69U);
  EXPECT_EQ(cascade_block_size(0.1, 100000), 8U);
  EXPECT_EQ(cascade_block_size(0.01, 50), 13U);
  EXPECT_EQ(cascade_block_size(0.0, 1000), 730U);
  EXPECT_EQ(cascade_block_size(0.0, 100), 73U);
  EXPECT_EQ(cascade_block_size(0.0, 50), 37U);
  EXPECT_EQ(cascade_block_size(0.5, 1), 1U);
}

TEST(Cascade, CorrectsAndCountsLeakage) {
  SeededRng rng(11);
  const auto alice = BitString::random(10'000, rng);
  const auto bob = noisy_copy(alice, 0.05, rng);
  PublicChannel log;
  const auto res = error_correct(alice, bob, 0.05, log, rng);
  EXPECT_EQ(res.alice, res.bob);
  EXPECT_EQ(res.report.errors_corrected, alice.hamming_distance(bob));
  EXPECT_EQ(res.report.parity_bits_leaked, log.count(MessageType::Parity));
  EXPECT_EQ(res.report.verification_bits_leaked, 64U);
  EXPECT_EQ(res.report.residual_error, 0.0);
  // Cascade leaks somewhat more than the Shannon limit n H2(e).
  const double shannon = 10'000 * binary_entropy(0.05);
  EXPECT_GT(double(res.report.parity_bits_leaked), shannon);
  EXPECT_LT(double(res.report.parity_bits_leaked), 1.6 * shannon);
}

TEST(Cascade, NoErrorsStillLeaksParities) {
  SeededRng rng(2);
  const auto alice = BitString::random(2000, rng);
  PublicChannel log;
  const auto res = error_correct(alice, alice, 0.01, log, rng);
  EXPECT_EQ(res.bob, alice);
  EXPECT_EQ(res.report.errors_corrected, 0U);
  EXPECT_GT(res.report.parity_bits_leaked, 0U);
}

TEST(Cascade, AbortsAboveBound) {
  SeededRng rng(3);
  const auto alice = BitString::random(1000, rng);
  PublicChannel log;
  EXPECT_THROW(error_correct(alice, alice, 0.151, log, rng), ReconciliationAborted);
  EXPECT_NO_THROW(error_correct(alice, alice, 0.15, log, rng));
  EXPECT_THROW(error_correct(alice, BitString(999), 0.01, log, rng), std::invalid_argument);
}

// Identical keys in at least 999 of 1000 trials at e = 0.12, n = 10^4.
TEST(Cascade, SuccessRateAtHighError) {
  SeededRng rng(20261019);
  int ok = 0;
  double leak_ratio = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto alice = BitString::random(10'000, rng);
    const auto bob = noisy_copy(alice, 0.12, rng);
    PublicChannel log;
    try {
      const auto res = error_correct(alice, bob, 0.12, log, rng);
      if (res.alice == res.bob) ++ok;
      leak_ratio += res.report.parity_bits_leaked / (10'000 * binary_entropy(0.12));
    } catch (const ReconciliationAborted&) {
    }
  }
  EXPECT_GE(ok, 999);
  RecordProperty("mean_leak_over_shannon", std::to_string(leak_ratio / 1000));
}

TEST(Cascade, DeterministicTranscript) {
  auto run = [] {
    SeededRng rng(77);
    const auto alice = BitString::random(5000, rng);
    const auto bob = noisy_copy(alice, 0.03, rng);
    PublicChannel log;
    error_correct(alice, bob, 0.03, log, rng);
    std::ostringstream os;
    log.write(os);
    return os.str();
  };
  EXPECT_EQ(run(), run());
}

TEST(PrivacyAmplification, FinalLength) {
  AmplificationParams p{0.5, 1000, 100, 30};
  EXPECT_EQ(p.final_length(), 370);
  p.parity_discount = 480;
  EXPECT_EQ(p.final_length(), -10);
  SeededRng rng(1);
  EXPECT_THROW(toeplitz_seed(p, rng), NoSecureKey);
  EXPECT_THROW(privacy_amplify(BitString(1000), p, BitString(1000)), NoSecureKey);
  p.tau = 1.5;
  EXPECT_THROW(p.final_length(), std::domain_error);
}

TEST(PrivacyAmplification, MatchesExplicitToeplitzMatrix) {
  SeededRng rng(123);
  for (std::size_t n : {1U, 7U, 64U, 65U, 200U, 1031U}) {
    for (std::size_t m : {1U, 5U, 64U, 129U}) {
      if (m > n) continue;
      const AmplificationParams p{double(m) / double(n), n, 0, 0};
      ASSERT_EQ(p.final_length(), static_cast<long long>(m));
      const auto key = BitString::random(n, rng);
      const auto seed = toeplitz_seed(p, rng);
      ASSERT_EQ(seed.size(), n + m - 1);
      const auto out = privacy_amplify(key, p, seed);
      const auto seed_bits = seed.to_bits();
      const auto key_bits = key.to_bits();
      const auto ref = oracle::toeplitz(std::vector<int>(seed_bits.begin(), seed_bits.end()),
                                        std::vector<int>(key_bits.begin(), key_bits.end()), m);
      for (std::size_t i = 0; i < m; ++i) ASSERT_EQ(out.get(i), ref[i]) << n << ' ' << m << ' ' << i;
    }
  }
}

TEST(PrivacyAmplification, IsLinear) {
  SeededRng rng(8);
  const AmplificationParams p{0.5, 500, 0, 10};
  const auto seed = toeplitz_seed(p, rng);
  const auto x = BitString::random(500, rng);
  const auto y = BitString::random(500, rng);
  EXPECT_EQ(privacy_amplify(x ^ y, p, seed), privacy_amplify(x, p, seed) ^ privacy_amplify(y, p, seed));
}

TEST(PrivacyAmplification, CollisionProbabilityAndBound) {
  const std::vector<double> uniform(4, 0.25);
  EXPECT_DOUBLE_EQ(collision_probability(uniform), 0.25);
  const std::vector<double> skew = {0.9, 0.1};
  EXPECT_NEAR(collision_probability(skew), 0.82, 1e-15);
  EXPECT_THROW(collision_probability(std::vector<double>{0.5, 0.6}), std::domain_error);
  EXPECT_NEAR(eve_information_bound(30), std::pow(2.0, -30) / std::log(2.0), 1e-22);
}

}  // namespace
}  // namespace ykdist
