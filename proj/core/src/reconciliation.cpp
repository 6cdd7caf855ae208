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

#include "ykdist/reconciliation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ykdist/errors.hpp"

namespace ykdist {

namespace {

std::vector<std::size_t> shuffled_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SeededRng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.uniform_index(i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

class Cascade {
 public:
  Cascade(const BitString& alice, BitString bob, PublicChannel& log)
      : alice_(alice), bob_(std::move(bob)), log_(log), n_(alice.size()) {}

  void run(std::size_t first_block, int n_passes, SeededRng& rng) {
    std::size_t block = first_block;
    for (int p = 0; p < n_passes; ++p) {
      if (p == 0) {
        add_pass(identity_order(), block);
      } else {
        const std::uint64_t seed = rng.next_u64();
        log_.send(MessageType::PermutationSeed, {static_cast<std::uint64_t>(p), seed});
        add_pass(shuffled_order(n_, seed), block);
      }
      Pass& pass = passes_.back();
      const std::size_t blocks = pass.alice_parity.size();
      for (std::size_t b = 0; b < blocks; ++b) {
        const auto [begin, end] = block_range(pass, b);
        passes_.back().alice_parity[b] =
            static_cast<std::int8_t>(disclose_parity(passes_.size() - 1, begin, end));
        if (is_odd(passes_.size() - 1, b)) {
          pending_.emplace_back(passes_.size() - 1, b);
          drain();
        }
      }
      if (block >= n_) break;  // a single block covers the string; more passes add nothing
      block = std::min(block * 2, n_);
    }
  }

  BitString take_bob() { return std::move(bob_); }
  std::size_t leaked() const noexcept { return leaked_; }
  std::size_t corrected() const noexcept { return corrected_; }
  int passes_run() const noexcept { return static_cast<int>(passes_.size()); }

 private:
  struct Pass {
    std::vector<std::size_t> order;
    std::vector<std::uint32_t> block_of;
    std::size_t block_size = 0;
    std::vector<std::int8_t> alice_parity;  // -1 until disclosed
    std::vector<std::uint8_t> bob_parity;
  };

  std::vector<std::size_t> identity_order() const {
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
  }

  void add_pass(std::vector<std::size_t> order, std::size_t block_size) {
    Pass pass;
    pass.order = std::move(order);
    pass.block_size = block_size;
    const std::size_t blocks = (n_ + block_size - 1) / block_size;
    pass.block_of.resize(n_);
    pass.alice_parity.assign(blocks, -1);
    pass.bob_parity.assign(blocks, 0);
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t pos = pass.order[k];
      const auto b = static_cast<std::uint32_t>(k / block_size);
      pass.block_of[pos] = b;
      pass.bob_parity[b] ^= static_cast<std::uint8_t>(bob_.get(pos));
    }
    passes_.push_back(std::move(pass));
  }

  std::pair<std::size_t, std::size_t> block_range(const Pass& pass, std::size_t b) const {
    const std::size_t begin = b * pass.block_size;
    return {begin, std::min(begin + pass.block_size, n_)};
  }

  // Alice announces the parity of order[begin, end) of pass p.
  int disclose_parity(std::size_t p, std::size_t begin, std::size_t end) {
    const Pass& pass = passes_[p];
    int parity = 0;
    for (std::size_t k = begin; k < end; ++k) parity ^= alice_.get(pass.order[k]);
    log_.send(MessageType::Parity, {p, begin, end, static_cast<std::uint64_t>(parity)});
    ++leaked_;
    return parity;
  }

  int bob_parity(std::size_t p, std::size_t begin, std::size_t end) const {
    const Pass& pass = passes_[p];
    int parity = 0;
    for (std::size_t k = begin; k < end; ++k) parity ^= bob_.get(pass.order[k]);
    return parity;
  }

  bool is_odd(std::size_t p, std::size_t b) const {
    const Pass& pass = passes_[p];
    return pass.alice_parity[b] >= 0 &&
           static_cast<std::uint8_t>(pass.alice_parity[b]) != pass.bob_parity[b];
  }

  // BINARY: halve an odd block until the single wrong bit is isolated.
  std::size_t locate(std::size_t p, std::size_t begin, std::size_t end) {
    while (end - begin > 1) {
      const std::size_t mid = begin + (end - begin) / 2;
      if (disclose_parity(p, begin, mid) != bob_parity(p, begin, mid)) {
        end = mid;
      } else {
        begin = mid;
      }
    }
    return passes_[p].order[begin];
  }

  void drain() {
    while (!pending_.empty()) {
      const auto [p, b] = pending_.back();
      pending_.pop_back();
      if (!is_odd(p, b)) continue;
      const auto [begin, end] = block_range(passes_[p], b);
      const std::size_t pos = locate(p, begin, end);
      bob_.flip(pos);
      ++corrected_;
      for (std::size_t q = 0; q < passes_.size(); ++q) {
        const std::uint32_t blk = passes_[q].block_of[pos];
        passes_[q].bob_parity[blk] ^= 1;
        if (q != p && is_odd(q, blk)) pending_.emplace_back(q, blk);
      }
    }
  }

  const BitString& alice_;
  BitString bob_;
  PublicChannel& log_;
  std::size_t n_;
  std::vector<Pass> passes_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
  std::size_t leaked_ = 0;
  std::size_t corrected_ = 0;
};

std::uint64_t subset_parity_hash(const BitString& key, std::uint64_t seed, int bits) {
  SeededRng rng(seed);
  std::uint64_t hash = 0;
  const auto words = key.words();
  for (int j = 0; j < bits; ++j) {
    unsigned parity = 0;
    for (auto w : words) parity ^= static_cast<unsigned>(std::popcount(w & rng.next_u64())) & 1U;
    hash |= static_cast<std::uint64_t>(parity) << j;
  }
  return hash;
}

}  // namespace

std::size_t cascade_block_size(double estimated_error, std::size_t n, double block_constant) {
  if (n == 0) return 1;
  if (estimated_error < 0.0) return n;
  // Size for a two-sigma upper bound on the estimate: a handful of errors in
  // a short key otherwise gives blocks spanning the whole string, where pairs
  // of errors hide from every pass.
  const double dn = static_cast<double>(n);
  const double e = estimated_error + 2.0 * std::sqrt(estimated_error * (1.0 - estimated_error) / dn) + 1.0 / dn;
  const double k = std::ceil(block_constant / e);
  if (k >= static_cast<double>(n)) return n;
  return std::max<std::size_t>(1, static_cast<std::size_t>(k));
}

ReconciliationResult error_correct(const BitString& alice, const BitString& bob,
                                   double estimated_error, PublicChannel& log, SeededRng& rng,
                                   const CascadeOptions& options) {
  if (alice.size() != bob.size()) {
    throw std::invalid_argument("error_correct: sifted keys differ in length");
  }
  if (!(estimated_error >= 0.0)) throw std::domain_error("error estimate must be >= 0");
  if (estimated_error > kMaxReconcilableError) {
    throw ReconciliationAborted("reconciliation infeasible: estimated error rate above 0.15");
  }
  if (options.passes < 1) throw std::invalid_argument("Cascade needs at least one pass");
  if (options.verification_bits < 0 || options.verification_bits > 64) {
    throw std::invalid_argument("verification_bits must lie in [0, 64]");
  }

  ReconciliationResult result;
  ReconciliationReport& report = result.report;
  report.n_sifted = alice.size();
  report.n_reconciled = alice.size();
  result.alice = alice;
  if (alice.empty()) {
    result.bob = bob;
    return result;
  }

  const std::size_t first_block =
      cascade_block_size(estimated_error, alice.size(), options.block_constant);
  report.initial_block_size = first_block;
  Cascade cascade(alice, bob, log);
  cascade.run(first_block, options.passes, rng);
  result.bob = cascade.take_bob();
  report.parity_bits_leaked = cascade.leaked();
  report.errors_corrected = cascade.corrected();
  report.passes = cascade.passes_run();
  report.residual_error = static_cast<double>(result.alice.hamming_distance(result.bob)) /
                          static_cast<double>(alice.size());

  if (options.verification_bits > 0) {
    const std::uint64_t seed = rng.next_u64();
    log.send(MessageType::VerificationSeed, {seed});
    const std::uint64_t alice_hash = subset_parity_hash(result.alice, seed, options.verification_bits);
    log.send(MessageType::VerificationHash, {alice_hash});
    report.verification_bits_leaked = static_cast<std::size_t>(options.verification_bits);
    if (alice_hash != subset_parity_hash(result.bob, seed, options.verification_bits)) {
      throw ReconciliationAborted("reconciliation failed: verification hash mismatch");
    }
  }
  return result;
}

}  // namespace ykdist
