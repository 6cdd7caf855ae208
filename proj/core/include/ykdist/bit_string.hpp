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

#ifndef YKDIST_BIT_STRING_HPP_
#define YKDIST_BIT_STRING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ykdist/rng.hpp"

namespace ykdist {

/// Packed bit sequence. Bit i lives in word i / 64 at position i % 64.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size);
  static BitString from_bits(std::span<const std::uint8_t> bits);
  static BitString random(std::size_t size, SeededRng& rng);
  /// Parses the hex encoding produced by to_hex(); `size` trims the padding.
  static BitString from_hex(std::string_view hex, std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  int get(std::size_t i) const { return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1U); }
  void set(std::size_t i, int value);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void push_back(int value);

  /// The 64 bits starting at `pos` (bit pos in the LSB); bits past the end read 0.
  std::uint64_t window(std::size_t pos) const;

  std::size_t count_ones() const;
  int parity() const;
  /// Number of positions where the two strings differ. Sizes must match.
  std::size_t hamming_distance(const BitString& other) const;

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString lhs, const BitString& rhs) { return lhs ^= rhs; }
  bool operator==(const BitString& other) const = default;

  /// Bits packed MSB-first into bytes, lowercase hex, zero-padded to a byte.
  std::string to_hex() const;
  std::vector<std::uint8_t> to_bits() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  void mask_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ykdist

#endif  // YKDIST_BIT_STRING_HPP_
