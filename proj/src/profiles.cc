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

#include "ctzk/profiles.h"

namespace ctzk {

const CommitParams& production_commit_params() {
  static const CommitParams params =
      CommitParams::setup({.p_bits = 4096, .q_bits = 768}, "ctzk-production-v1", 256);
  return params;
}

const CommitParams& toy_commit_params() {
  static const CommitParams params =
      CommitParams::setup({.p_bits = 512, .q_bits = 400}, "ctzk-toy-v1", 128);
  return params;
}

}  // namespace ctzk
