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

#ifndef CTZK_PARALLEL_H_
#define CTZK_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace ctzk::parallel {

// Global worker count for the OpenMP kernels. Defaults to 1 (serial), so
// library results and timings are reproducible unless a caller opts in;
// the CTZK_THREADS environment variable overrides the default at startup.
int max_threads();
void set_max_threads(int n);
int hardware_threads();

// Runs body(i) for i in [0, n). Parallel iff max_threads() > 1 and OpenMP
// is compiled in; otherwise a plain serial loop. Exceptions thrown by the
// body are captured and rethrown on the calling thread (first one wins).
void for_range(int64_t n, const std::function<void(int64_t)>& body);

// All-of reduction over pred(i). The parallel version does not short-circuit
// across threads; use when each predicate is cheap relative to n.
bool all_of_range(int64_t n, const std::function<bool(int64_t)>& pred);

}  // namespace ctzk::parallel

#endif  // CTZK_PARALLEL_H_
