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

#include "ctzk/parallel.h"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#ifdef CTZK_HAVE_OPENMP
#include <omp.h>
#endif

namespace ctzk::parallel {

namespace {

int initial_threads() {
  if (const char* env = std::getenv("CTZK_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

std::atomic<int> g_threads{initial_threads()};

}  // namespace

int max_threads() { return g_threads.load(); }

void set_max_threads(int n) { g_threads.store(n < 1 ? 1 : n); }

int hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

void for_range(int64_t n, const std::function<void(int64_t)>& body) {
  int threads = max_threads();
#ifdef CTZK_HAVE_OPENMP
  if (threads > 1 && n > 1) {
    std::exception_ptr err;
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int64_t i = 0; i < n; ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  (void)threads;
  for (int64_t i = 0; i < n; ++i) body(i);
}

bool all_of_range(int64_t n, const std::function<bool(int64_t)>& pred) {
  std::atomic<bool> ok{true};
  for_range(n, [&](int64_t i) {
    if (ok.load(std::memory_order_relaxed) && !pred(i)) {
      ok.store(false, std::memory_order_relaxed);
    }
  });
  return ok.load();
}

}  // namespace ctzk::parallel
