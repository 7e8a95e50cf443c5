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

#include <doctest.h>

#include <functional>

#include "ctzk/encoding.h"
#include "ctzk/merkle.h"
#include "ctzk/random.h"

using namespace ctzk;

namespace {

std::vector<std::vector<uint8_t>> make_inputs(size_t n) {
  std::vector<std::vector<uint8_t>> inputs;
  for (size_t i = 0; i < n; ++i) {
    std::string s = "leaf-" + std::to_string(i);
    inputs.emplace_back(s.begin(), s.end());
  }
  return inputs;
}

// Independent recomputation oracle: iterative merge driven by the RFC 6962
// split rule, structured differently from the production recursion.
Sha256Digest oracle_root(std::span<const Sha256Digest> leaves) {
  if (leaves.empty()) return sha256({});
  struct Frame {
    size_t lo, hi;
  };
  // Evaluate with an explicit stack and a memo of computed subtrees.
  std::vector<std::pair<Frame, Sha256Digest>> memo;
  std::function<Sha256Digest(size_t, size_t)> eval = [&](size_t lo,
                                                         size_t hi) -> Sha256Digest {
    if (hi - lo == 1) return leaves[lo];
    size_t k = 1;
    while (k * 2 < hi - lo) k *= 2;
    Sha256Digest left = eval(lo, lo + k);
    Sha256Digest right = eval(lo + k, hi);
    std::vector<uint8_t> buf{0x01};
    buf.insert(buf.end(), left.begin(), left.end());
    buf.insert(buf.end(), right.begin(), right.end());
    return sha256(buf);
  };
  return eval(0, leaves.size());
}

}  // namespace

TEST_CASE("empty tree root is SHA-256 of the empty string") {
  CHECK(hex_encode(merkle_root({})) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("hand-composed roots for sizes 1 and 2") {
  auto inputs = make_inputs(2);
  Sha256Digest l0 = merkle_leaf_hash(inputs[0]);
  Sha256Digest l1 = merkle_leaf_hash(inputs[1]);

  std::vector<Sha256Digest> one{l0};
  CHECK(merkle_root(one) == l0);

  // MTH = H(0x01 || l0 || l1), leaf hash = H(0x00 || input).
  std::vector<uint8_t> buf{0x01};
  buf.insert(buf.end(), l0.begin(), l0.end());
  buf.insert(buf.end(), l1.begin(), l1.end());
  std::vector<Sha256Digest> two{l0, l1};
  CHECK(merkle_root(two) == sha256(buf));

  std::vector<uint8_t> leaf_buf{0x00};
  leaf_buf.insert(leaf_buf.end(), inputs[0].begin(), inputs[0].end());
  CHECK(l0 == sha256(leaf_buf));
}

TEST_CASE("roots match the independent oracle for sizes 1..16") {
  for (size_t n = 1; n <= 16; ++n) {
    std::vector<Sha256Digest> leaves = merkle_hash_leaves(make_inputs(n));
    CHECK(merkle_root(leaves) == oracle_root(leaves));
  }
}

TEST_CASE("audit paths verify for every leaf of every size up to 16") {
  for (size_t n = 1; n <= 16; ++n) {
    std::vector<Sha256Digest> leaves = merkle_hash_leaves(make_inputs(n));
    Sha256Digest root = merkle_root(leaves);
    for (size_t i = 0; i < n; ++i) {
      std::vector<Sha256Digest> path = merkle_audit_path(i, leaves);
      CHECK(merkle_verify_inclusion(root, i, n, leaves[i], path));
      // Wrong index or wrong leaf must fail.
      if (n > 1) {
        CHECK_FALSE(merkle_verify_inclusion(root, (i + 1) % n, n, leaves[i], path));
      }
    }
  }
}

TEST_CASE("exhaustive single-node corruption never verifies (size <= 16)") {
  for (size_t n = 2; n <= 16; ++n) {
    std::vector<Sha256Digest> leaves = merkle_hash_leaves(make_inputs(n));
    Sha256Digest root = merkle_root(leaves);
    for (size_t i = 0; i < n; ++i) {
      std::vector<Sha256Digest> path = merkle_audit_path(i, leaves);
      for (size_t node = 0; node < path.size(); ++node) {
        for (size_t byte : {size_t{0}, size_t{31}}) {
          std::vector<Sha256Digest> bad = path;
          bad[node][byte] ^= 0xFF;
          CHECK_FALSE(merkle_verify_inclusion(root, i, n, leaves[i], bad));
        }
      }
      // Truncated and extended paths must also fail.
      if (!path.empty()) {
        std::vector<Sha256Digest> shorter(path.begin(), path.end() - 1);
        CHECK_FALSE(merkle_verify_inclusion(root, i, n, leaves[i], shorter));
      }
      std::vector<Sha256Digest> longer = path;
      longer.push_back(leaves[0]);
      CHECK_FALSE(merkle_verify_inclusion(root, i, n, leaves[i], longer));
    }
  }
}
