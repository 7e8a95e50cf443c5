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

#include "ctzk/bignum.h"

#include <stdexcept>

namespace ctzk {

Bigint powm(const Bigint& base, const Bigint& exp, const Bigint& mod) {
  Bigint out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return out;
}

Bigint powm_neg(const Bigint& base, const Bigint& exp, const Bigint& mod) {
  return invmod(powm(base, exp, mod), mod);
}

Bigint invmod(const Bigint& a, const Bigint& mod) {
  Bigint out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("invmod: element not invertible");
  }
  return out;
}

Bigint mulm(const Bigint& a, const Bigint& b, const Bigint& mod) {
  Bigint out = a * b;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), mod.get_mpz_t());
  return out;
}

size_t bit_length(const Bigint& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::vector<uint8_t> to_bytes(const Bigint& x) {
  if (x < 0) throw std::invalid_argument("to_bytes: negative value");
  if (x == 0) return {};
  size_t count = (bit_length(x) + 7) / 8;
  std::vector<uint8_t> out(count);
  mpz_export(out.data(), &count, 1, 1, 1, 0, x.get_mpz_t());
  out.resize(count);
  return out;
}

std::vector<uint8_t> to_bytes_padded(const Bigint& x, size_t len) {
  std::vector<uint8_t> raw = to_bytes(x);
  if (raw.size() > len) {
    return {raw.end() - static_cast<ptrdiff_t>(len), raw.end()};
  }
  std::vector<uint8_t> out(len - raw.size(), 0);
  out.insert(out.end(), raw.begin(), raw.end());
  return out;
}

Bigint from_bytes(std::span<const uint8_t> bytes) {
  Bigint out = 0;
  if (!bytes.empty()) {
    mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return out;
}

bool is_probable_prime(const Bigint& x, int reps) {
  return mpz_probab_prime_p(x.get_mpz_t(), reps) != 0;
}

Bigint next_prime(const Bigint& x) {
  Bigint out;
  mpz_nextprime(out.get_mpz_t(), x.get_mpz_t());
  return out;
}

Bigint pow2(unsigned k) {
  Bigint out = 0;
  mpz_setbit(out.get_mpz_t(), k);
  return out;
}

}  // namespace ctzk
