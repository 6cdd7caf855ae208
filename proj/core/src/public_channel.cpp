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

#include "ykdist/public_channel.hpp"

#include <algorithm>
#include <ostream>

namespace ykdist {

std::string_view to_string(MessageType type) {
  switch (type) {
    case MessageType::SiftIndices:
      return "sift_indices";
    case MessageType::PermutationSeed:
      return "permutation_seed";
    case MessageType::Parity:
      return "parity";
    case MessageType::VerificationSeed:
      return "verification_seed";
    case MessageType::VerificationHash:
      return "verification_hash";
    case MessageType::ToeplitzSeed:
      return "toeplitz_seed";
  }
  return "unknown";
}

void PublicChannel::send(MessageType type, std::vector<std::uint64_t> payload) {
  messages_.push_back({type, std::move(payload)});
}

std::size_t PublicChannel::count(MessageType type) const {
  return static_cast<std::size_t>(std::count_if(
      messages_.begin(), messages_.end(), [type](const auto& m) { return m.type == type; }));
}

void PublicChannel::write(std::ostream& out) const {
  out << "type,payload\n";
  for (const auto& m : messages_) {
    out << to_string(m.type) << ',';
    for (std::size_t i = 0; i < m.payload.size(); ++i) {
      if (i != 0) out << ' ';
      out << m.payload[i];
    }
    out << '\n';
  }
}

}  // namespace ykdist
