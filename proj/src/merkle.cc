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

#include "ctzk/merkle.h"

#include "ctzk/parallel.h"

namespace ctzk {

namespace {

// Largest power of two strictly less than n (n >= 2).
uint64_t split_point(uint64_t n) {
  uint64_t k = 1;
  while (k * 2 < n) k *= 2;
  return k;
}

}  // namespace

Sha256Digest merkle_leaf_hash(std::span<const uint8_t> leaf_input) {
  std::vector<uint8_t> buf;
  buf.reserve(leaf_input.size() + 1);
  buf.push_back(0x00);
  buf.insert(buf.end(), leaf_input.begin(), leaf_input.end());
  return sha256(buf);
}

Sha256Digest merkle_node_hash(const Sha256Digest& left, const Sha256Digest& right) {
  std::vector<uint8_t> buf;
  buf.reserve(65);
  buf.push_back(0x01);
  buf.insert(buf.end(), left.begin(), left.end());
  buf.insert(buf.end(), right.begin(), right.end());
  return sha256(buf);
}

Sha256Digest merkle_root(std::span<const Sha256Digest> leaves) {
  if (leaves.empty()) return sha256({});
  if (leaves.size() == 1) return leaves[0];
  uint64_t k = split_point(leaves.size());
  return merkle_node_hash(merkle_root(leaves.subspan(0, k)),
                          merkle_root(leaves.subspan(k)));
}

std::vector<Sha256Digest> merkle_audit_path(uint64_t index,
                                            std::span<const Sha256Digest> leaves) {
  if (index >= leaves.size()) throw std::out_of_range("merkle: index out of range");
  if (leaves.size() == 1) return {};
  uint64_t k = split_point(leaves.size());
  std::vector<Sha256Digest> path;
  if (index < k) {
    path = merkle_audit_path(index, leaves.subspan(0, k));
    path.push_back(merkle_root(leaves.subspan(k)));
  } else {
    path = merkle_audit_path(index - k, leaves.subspan(k));
    path.push_back(merkle_root(leaves.subspan(0, k)));
  }
  return path;
}

bool merkle_verify_inclusion(const Sha256Digest& root, uint64_t index,
                             uint64_t tree_size, const Sha256Digest& leaf_hash,
                             std::span<const Sha256Digest> path) {
  if (index >= tree_size) return false;
  // RFC 6962 section 2.1.1 verification walk.
  uint64_t fn = index;
  uint64_t sn = tree_size - 1;
  Sha256Digest r = leaf_hash;
  for (const Sha256Digest& p : path) {
    if (sn == 0) return false;
    if ((fn & 1) || fn == sn) {
      r = merkle_node_hash(p, r);
      while (fn != 0 && (fn & 1) == 0) {
        fn >>= 1;
        sn >>= 1;
      }
    } else {
      r = merkle_node_hash(r, p);
    }
    fn >>= 1;
    sn >>= 1;
  }
  return sn == 0 && r == root;
}

std::vector<Sha256Digest> merkle_hash_leaves(
    std::span<const std::vector<uint8_t>> leaf_inputs) {
  std::vector<Sha256Digest> out(leaf_inputs.size());
  parallel::for_range(static_cast<int64_t>(leaf_inputs.size()), [&](int64_t i) {
    out[i] = merkle_leaf_hash(leaf_inputs[i]);
  });
  return out;
}

}  // namespace ctzk
