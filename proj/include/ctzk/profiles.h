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
// Named parameter profiles. The production group is sized so the integer
// PoK responses (message width 226 + 256-bit challenges + 128-bit hiding
// slack) stay below the subgroup order, which lets congruences mod q lift
// to equalities over the integers in the soundness argument. The toy
// profile keeps the same structure at test scale.

#ifndef CTZK_PROFILES_H_
#define CTZK_PROFILES_H_

#include "ctzk/pedersen.h"

namespace ctzk {

// 4096-bit modulus, 768-bit subgroup, 256-bit challenges. Deterministic;
// cached after the first call (generation takes a few seconds).
const CommitParams& production_commit_params();

// 512-bit modulus, 400-bit subgroup, 128-bit challenges.
const CommitParams& toy_commit_params();

inline constexpr unsigned kProductionClBits = 2048;
inline constexpr unsigned kToyClBits = 512;

}  // namespace ctzk

#endif  // CTZK_PROFILES_H_
