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

#ifndef CTZK_RANDOM_H_
#define CTZK_RANDOM_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "ctzk/bignum.h"

namespace ctzk {

class RandomStream {
 public:
  virtual ~RandomStream() = default;
  virtual void fill(uint8_t* out, size_t len) = 0;

  // Uniform in [0, 2^bits).
  Bigint random_bits(unsigned bits);
  // Uniform in [0, 2^bits) with the top bit forced, i.e. exactly `bits` long.
  Bigint random_exact_bits(unsigned bits);
  // Uniform in [0, bound) by rejection sampling.
  Bigint random_below(const Bigint& bound);
};

// OS-backed CSPRNG (OpenSSL RAND_bytes). Thread-safe.
class SystemRandom : public RandomStream {
 public:
  void fill(uint8_t* out, size_t len) override;
};

// Deterministic byte stream: SHA-256 in counter mode over a seed label.
// Used wherever the artifact needs reproducible parameter generation.
class DrbgStream : public RandomStream {
 public:
  explicit DrbgStream(std::string_view seed_label);
  void fill(uint8_t* out, size_t len) override;

 private:
  std::string seed_;
  uint64_t counter_ = 0;
  uint8_t buf_[32];
  size_t avail_ = 0;
};

}  // namespace ctzk

#endif  // CTZK_RANDOM_H_
