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

#include "ctzk/kernels.h"

#include <atomic>
#include <mutex>
#include <stdexcept>

#include "ctzk/parallel.h"

#ifdef CTZK_HAVE_OPENMP
#include <omp.h>
#endif

namespace ctzk {

namespace {

// Small primes for pre-sieving both q and 2q+1 before any Miller-Rabin.
const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t kLimit = 8192;
    std::vector<bool> composite(kLimit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 3; i < kLimit; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint32_t j = 3 * i; j < kLimit; j += 2 * i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool sieve_pair_ok(const Bigint& q) {
  for (uint32_t sp : small_primes()) {
    uint32_t r = static_cast<uint32_t>(mpz_fdiv_ui(q.get_mpz_t(), sp));
    if (r == 0) return false;
    if ((2 * static_cast<uint64_t>(r) + 1) % sp == 0) return false;
  }
  return true;
}

Bigint draw_candidate(unsigned bits, RandomStream& rng) {
  // q of bits-1 bits with the two leading bits set keeps p = 2q+1 in the
  // top quarter of its width.
  Bigint q = rng.random_exact_bits(bits - 1);
  mpz_setbit(q.get_mpz_t(), bits - 2);
  mpz_setbit(q.get_mpz_t(), bits - 3);
  mpz_setbit(q.get_mpz_t(), 0);
  return q;
}

}  // namespace

bool safe_prime_candidate_ok(const Bigint& q_half) {
  if (!sieve_pair_ok(q_half)) return false;
  if (mpz_probab_prime_p(q_half.get_mpz_t(), 1) == 0) return false;
  Bigint p = 2 * q_half + 1;
  if (mpz_probab_prime_p(p.get_mpz_t(), 1) == 0) return false;
  return is_probable_prime(q_half, 25) && is_probable_prime(p, 25);
}

Bigint find_safe_prime_serial(unsigned bits, RandomStream& rng) {
  if (bits < 32) throw std::invalid_argument("find_safe_prime: width too small");
  while (true) {
    Bigint q = draw_candidate(bits, rng);
    if (safe_prime_candidate_ok(q)) return 2 * q + 1;
  }
}

Bigint find_safe_prime_parallel(unsigned bits, int threads) {
  if (bits < 32) throw std::invalid_argument("find_safe_prime: width too small");
#ifdef CTZK_HAVE_OPENMP
  Bigint result;
  std::atomic<bool> found{false};
  std::mutex mu;
#pragma omp parallel num_threads(threads)
  {
    SystemRandom rng;
    while (!found.load(std::memory_order_relaxed)) {
      Bigint q = draw_candidate(bits, rng);
      if (!safe_prime_candidate_ok(q)) continue;
      std::lock_guard<std::mutex> lock(mu);
      if (!found.exchange(true)) result = 2 * q + 1;
    }
  }
  return result;
#else
  (void)threads;
  SystemRandom rng;
  return find_safe_prime_serial(bits, rng);
#endif
}

Bigint find_safe_prime(unsigned bits, RandomStream& rng) {
  int threads = parallel::max_threads();
  if (threads > 1) return find_safe_prime_parallel(bits, threads);
  return find_safe_prime_serial(bits, rng);
}

FixedBaseTable FixedBaseTable::build(const Bigint& base, const Bigint& modulus,
                                     unsigned max_exp_bits, unsigned window) {
  FixedBaseTable t;
  t.modulus = modulus;
  t.window = window;
  unsigned cols = (max_exp_bits + window - 1) / window;
  t.columns.resize(cols);
  Bigint col_base = base % modulus;
  for (unsigned c = 0; c < cols; ++c) {
    auto& col = t.columns[c];
    col.resize(1u << window);
    col[0] = 1;
    for (unsigned i = 1; i < col.size(); ++i) {
      col[i] = mulm(col[i - 1], col_base, modulus);
    }
    // Advance base by 2^window.
    for (unsigned i = 0; i < window; ++i) col_base = mulm(col_base, col_base, modulus);
  }
  return t;
}

Bigint FixedBaseTable::pow(const Bigint& exp) const {
  if (exp < 0) throw std::invalid_argument("FixedBaseTable: negative exponent");
  if (bit_length(exp) > columns.size() * window) {
    throw std::invalid_argument("FixedBaseTable: exponent too wide");
  }
  Bigint acc = 1;
  for (size_t c = 0; c < columns.size(); ++c) {
    unsigned digit = 0;
    for (unsigned b = 0; b < window; ++b) {
      if (mpz_tstbit(exp.get_mpz_t(), c * window + b)) digit |= 1u << b;
    }
    if (digit) acc = mulm(acc, columns[c][digit], modulus);
  }
  return acc;
}

std::vector<size_t> scan_fixed_base_matches_serial(const Bigint& base,
                                                   const Bigint& modulus,
                                                   const std::vector<Bigint>& exps,
                                                   const Bigint& target) {
  std::vector<size_t> hits;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (powm(base, exps[i], modulus) == target) hits.push_back(i);
  }
  return hits;
}

std::vector<size_t> scan_fixed_base_matches(const Bigint& base, const Bigint& modulus,
                                            const std::vector<Bigint>& exps,
                                            const Bigint& target) {
  unsigned max_bits = 0;
  for (const Bigint& e : exps) {
    max_bits = std::max(max_bits, static_cast<unsigned>(bit_length(e)));
  }
  if (max_bits == 0) max_bits = 1;
  FixedBaseTable table = FixedBaseTable::build(base, modulus, max_bits);

  std::vector<std::atomic<bool>> hit(exps.size());
  for (auto& h : hit) h.store(false, std::memory_order_relaxed);
  parallel::for_range(static_cast<int64_t>(exps.size()), [&](int64_t i) {
    if (table.pow(exps[i]) == target) hit[i].store(true, std::memory_order_relaxed);
  });
  std::vector<size_t> hits;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (hit[i].load(std::memory_order_relaxed)) hits.push_back(i);
  }
  return hits;
}

std::vector<size_t> find_failures_serial(size_t n,
                                         const std::function<bool(size_t)>& pred) {
  std::vector<size_t> failures;
  for (size_t i = 0; i < n; ++i) {
    if (!pred(i)) failures.push_back(i);
  }
  return failures;
}

std::vector<size_t> find_failures(size_t n, const std::function<bool(size_t)>& pred) {
  if (parallel::max_threads() <= 1) return find_failures_serial(n, pred);
  std::vector<std::atomic<bool>> bad(n);
  for (auto& b : bad) b.store(false, std::memory_order_relaxed);
  parallel::for_range(static_cast<int64_t>(n), [&](int64_t i) {
    if (!pred(static_cast<size_t>(i))) bad[i].store(true, std::memory_order_relaxed);
  });
  std::vector<size_t> failures;
  for (size_t i = 0; i < n; ++i) {
    if (bad[i].load(std::memory_order_relaxed)) failures.push_back(i);
  }
  return failures;
}

}  // namespace ctzk
