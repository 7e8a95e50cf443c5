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
// RFC 6962 Merkle tree hashing: MTH, audit paths, and path verification.
// Used both by the log's tree head machinery and by short-lived
// certificate families.

#ifndef CTZK_MERKLE_H_
#define CTZK_MERKLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ctzk/hashing.h"

namespace ctzk {

Sha256Digest merkle_leaf_hash(std::span<const uint8_t> leaf_input);
Sha256Digest merkle_node_hash(const Sha256Digest& left, const Sha256Digest& right);

// MTH over pre-hashed leaves. MTH of zero leaves is SHA-256 of the empty
// string per RFC 6962 section 2.1.
Sha256Digest merkle_root(std::span<const Sha256Digest> leaves);

// Audit path for leaf `index` in a tree of `leaves.size()` leaves.
std::vector<Sha256Digest> merkle_audit_path(uint64_t index,
                                            std::span<const Sha256Digest> leaves);

bool merkle_verify_inclusion(const Sha256Digest& root, uint64_t index,
                             uint64_t tree_size, const Sha256Digest& leaf_hash,
                             std::span<const Sha256Digest> path);

// Leaf hashing over raw inputs; parallel when the thread setting allows.
std::vector<Sha256Digest> merkle_hash_leaves(
    std::span<const std::vector<uint8_t>> leaf_inputs);

}  // namespace ctzk

#endif  // CTZK_MERKLE_H_
