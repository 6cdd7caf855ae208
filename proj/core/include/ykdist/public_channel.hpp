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

#ifndef YKDIST_PUBLIC_CHANNEL_HPP_
#define YKDIST_PUBLIC_CHANNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace ykdist {

/// Everything that may cross the authenticated public channel. There is
/// deliberately no message type that carries key bits.
enum class MessageType : unsigned char {
  SiftIndices,         // Bob -> Alice: conclusive positions
  PermutationSeed,     // Alice -> Bob: seed of a Cascade pass shuffle; payload {pass, seed}
  Parity,              // Alice -> Bob: {pass, begin, end, parity} over the pass order
  VerificationSeed,    // {seed}
  VerificationHash,    // {alice_hash} 64 parities of random subsets
  ToeplitzSeed,        // {n_in, n_out, seed words...}
};

std::string_view to_string(MessageType type);

struct PublicMessage {
  MessageType type;
  std::vector<std::uint64_t> payload;
};

/// Append-only log of the public discussion; Eve sees all of it.
class PublicChannel {
 public:
  void send(MessageType type, std::vector<std::uint64_t> payload);

  const std::vector<PublicMessage>& messages() const noexcept { return messages_; }
  std::size_t count(MessageType type) const;
  bool empty() const noexcept { return messages_.empty(); }

  /// One record per line: `type,v0 v1 v2 ...` with decimal payload values.
  void write(std::ostream& out) const;

 private:
  std::vector<PublicMessage> messages_;
};

}  // namespace ykdist

#endif  // YKDIST_PUBLIC_CHANNEL_HPP_
