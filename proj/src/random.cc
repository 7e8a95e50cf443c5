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

#include "ctzk/random.h"

#include <openssl/rand.h>

#include <cstring>
#include <stdexcept>
#include <vector>

#include "ctzk/hashing.h"

namespace ctzk {

Bigint RandomStream::random_bits(unsigned bits) {
  if (bits == 0) return 0;
  size_t len = (bits + 7) / 8;
  std::vector<uint8_t> buf(len);
  fill(buf.data(), len);
  Bigint v = from_bytes(buf);
  unsigned excess = static_cast<unsigned>(len * 8 - bits);
  if (excess) v >>= excess;
  return v;
}

Bigint RandomStream::random_exact_bits(unsigned bits) {
  if (bits == 0) return 0;
  Bigint v = random_bits(bits);
  mpz_setbit(v.get_mpz_t(), bits - 1);
  return v;
}

Bigint RandomStream::random_below(const Bigint& bound) {
  if (bound <= 0) throw std::invalid_argument("random_below: bound must be positive");
  unsigned bits = static_cast<unsigned>(bit_length(bound));
  while (true) {
    Bigint v = random_bits(bits);
    if (v < bound) return v;
  }
}

void SystemRandom::fill(uint8_t* out, size_t len) {
  if (RAND_bytes(out, static_cast<int>(len)) != 1) {
    throw std::runtime_error("RAND_bytes failed");
  }
}

DrbgStream::DrbgStream(std::string_view seed_label) : seed_(seed_label) {}

void DrbgStream::fill(uint8_t* out, size_t len) {
  size_t done = 0;
  while (done < len) {
    if (avail_ == 0) {
      std::vector<uint8_t> block(seed_.begin(), seed_.end());
      for (int i = 7; i >= 0; --i) {
        block.push_back(static_cast<uint8_t>(counter_ >> (8 * i)));
      }
      Sha256Digest d = sha256(block);
      std::memcpy(buf_, d.data(), 32);
      avail_ = 32;
      ++counter_;
    }
    size_t take = std::min(avail_, len - done);
    std::memcpy(out + done, buf_ + (32 - avail_), take);
    avail_ -= take;
    done += take;
  }
}

}  // namespace ctzk
