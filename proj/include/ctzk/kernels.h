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
//
// Compute kernels with data-parallel inner loops. Each kernel ships in two
// forms: the OpenMP version used by the library (active when
// parallel::max_threads() > 1) and a plain serial reference used by the
// equivalence tests and the benchmark comparison.

#ifndef CTZK_KERNELS_H_
#define CTZK_KERNELS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "ctzk/bignum.h"
#include "ctzk/random.h"

namespace ctzk {

// Safe prime p = 2q+1 of exactly `bits` bits with the top two bits of p set
// (so products of two of them keep full width). Dispatches on the global
// thread setting; `rng` drives the search only in the serial case.
Bigint find_safe_prime(unsigned bits, RandomStream& rng);

Bigint find_safe_prime_serial(unsigned bits, RandomStream& rng);
Bigint find_safe_prime_parallel(unsigned bits, int threads);

// One candidate draw + sieve + primality cascade; exposed for tests.
bool safe_prime_candidate_ok(const Bigint& q_half);

// Fixed-base exponentiation table for scanning many exponents against one
// base (dictionary kernel).
struct FixedBaseTable {
  Bigint modulus;
  unsigned window = 0;
  std::vector<std::vector<Bigint>> columns;

  static FixedBaseTable build(const Bigint& base, const Bigint& modulus,
                              unsigned max_exp_bits, unsigned window = 6);
  Bigint pow(const Bigint& exp) const;
};

// Returns the indexes i where powm(base, exps[i], modulus) == target.
std::vector<size_t> scan_fixed_base_matches(const Bigint& base, const Bigint& modulus,
                                            const std::vector<Bigint>& exps,
                                            const Bigint& target);
std::vector<size_t> scan_fixed_base_matches_serial(const Bigint& base,
                                                   const Bigint& modulus,
                                                   const std::vector<Bigint>& exps,
                                                   const Bigint& target);

// Batch predicate evaluation used by the sweep/verification loops: returns
// the indexes where pred(i) is false.
std::vector<size_t> find_failures(size_t n, const std::function<bool(size_t)>& pred);
std::vector<size_t> find_failures_serial(size_t n,
                                         const std::function<bool(size_t)>& pred);

}  // namespace ctzk

#endif  // CTZK_KERNELS_H_
