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

#include "ykdist/bit_string.hpp"

#include <bit>
#include <stdexcept>

namespace ykdist {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("invalid hex digit");
}

}  // namespace

BitString::BitString(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitString BitString::from_bits(std::span<const std::uint8_t> bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw std::invalid_argument("bit values must be 0 or 1");
    if (bits[i] != 0) out.flip(i);
  }
  return out;
}

BitString BitString::random(std::size_t size, SeededRng& rng) {
  BitString out(size);
  for (auto& w : out.words_) w = rng.next_u64();
  out.mask_tail();
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t size) {
  if (hex.size() * 4 < size) throw std::invalid_argument("hex string too short for bit count");
  BitString out(size);
  for (std::size_t i = 0; i < size; ++i) {
    const int nibble = hex_value(hex[i / 4]);
    out.set(i, (nibble >> (3 - i % 4)) & 1);
  }
  return out;
}

void BitString::set(std::size_t i, int value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value != 0) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

void BitString::push_back(int value) {
  if (size_ % 64 == 0) words_.push_back(0);
  ++size_;
  set(size_ - 1, value);
}

std::uint64_t BitString::window(std::size_t pos) const {
  const std::size_t w = pos >> 6;
  const unsigned offset = pos & 63;
  if (w >= words_.size()) return 0;
  std::uint64_t lo = words_[w] >> offset;
  if (offset != 0 && w + 1 < words_.size()) lo |= words_[w + 1] << (64 - offset);
  return lo;
}

std::size_t BitString::count_ones() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

int BitString::parity() const { return static_cast<int>(count_ones() & 1U); }

std::size_t BitString::hamming_distance(const BitString& other) const {
  if (other.size_ != size_) throw std::invalid_argument("hamming_distance: size mismatch");
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
  }
  return n;
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.size_ != size_) throw std::invalid_argument("xor: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const std::size_t bytes = (size_ + 7) / 8;
  out.reserve(bytes * 2);
  for (std::size_t b = 0; b < bytes; ++b) {
    unsigned byte = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      const std::size_t i = b * 8 + k;
      const unsigned bit = i < size_ ? static_cast<unsigned>(get(i)) : 0U;
      byte |= bit << (7 - k);
    }
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xF]);
  }
  return out;
}

std::vector<std::uint8_t> BitString::to_bits() const {
  std::vector<std::uint8_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = static_cast<std::uint8_t>(get(i));
  return out;
}

void BitString::mask_tail() {
  const unsigned used = size_ & 63;
  if (used != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << used) - 1;
}

}  // namespace ykdist
