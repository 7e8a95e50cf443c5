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

#ifndef CTZK_BIGNUM_H_
#define CTZK_BIGNUM_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace ctzk {

// All multi-precision arithmetic in the project goes through GMP. Values are
// non-negative everywhere on the wire; negatives only appear transiently in
// modular arithmetic.
using Bigint = mpz_class;

Bigint powm(const Bigint& base, const Bigint& exp, const Bigint& mod);

// (base ^ -exp) mod `mod` for exp >= 0; requires gcd(base, mod) = 1.
Bigint powm_neg(const Bigint& base, const Bigint& exp, const Bigint& mod);

Bigint invmod(const Bigint& a, const Bigint& mod);
Bigint mulm(const Bigint& a, const Bigint& b, const Bigint& mod);

size_t bit_length(const Bigint& x);

// Minimal big-endian magnitude; empty vector for zero.
std::vector<uint8_t> to_bytes(const Bigint& x);
// Big-endian magnitude padded/truncated to exactly `len` bytes.
std::vector<uint8_t> to_bytes_padded(const Bigint& x, size_t len);
Bigint from_bytes(std::span<const uint8_t> bytes);

bool is_probable_prime(const Bigint& x, int reps = 25);
Bigint next_prime(const Bigint& x);

// 2^k as a Bigint.
Bigint pow2(unsigned k);

}  // namespace ctzk

#endif  // CTZK_BIGNUM_H_
