// Copyright 2026 The ctzk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTZK_HASHING_H_
#define CTZK_HASHING_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctzk/bignum.h"

namespace ctzk {

using Sha256Digest = std::array<uint8_t, 32>;

Sha256Digest sha256(std::span<const uint8_t> data);

// Width of the entry-hash scalar H(.): leading bits of SHA-256 read
// big-endian. Sums T + H(e) and I + H(e) therefore fit in 161 bits.
inline constexpr unsigned kHashScalarBits = 160;

// SHA-256 truncated to `bits` leading bits, as a big-endian integer.
Bigint hash_scalar(std::span<const uint8_t> data, unsigned bits = kHashScalarBits);

// Fiat-Shamir transcript. Absorbed items are length-framed so adjacent
// fields cannot be re-split; challenges are produced by counter-mode
// expansion of the running digest.
class Transcript {
 public:
  explicit Transcript(std::string_view domain_label);

  void absorb(std::string_view label, std::span<const uint8_t> bytes);
  void absorb_int(std::string_view label, const Bigint& v);
  void absorb_u64(std::string_view label, uint64_t v);

  // Uniform challenge in [0, 2^bits). Advances the transcript state.
  Bigint challenge(std::string_view label, unsigned bits);

  // Digest of everything absorbed so far; does not advance the state.
  Sha256Digest digest() const;

  // Independent sub-transcript for one sub-proof section. Challenges in a
  // fork are bound to the full parent state plus the section tag.
  Transcript fork(std::string_view section) const;

 private:
  std::vector<uint8_t> state_;
};

}  // namespace ctzk

#endif  // CTZK_HASHING_H_
