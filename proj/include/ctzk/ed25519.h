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
// Plain deterministic signatures (Ed25519 via OpenSSL) for the log's SCT
// body and tree-head keys. These never appear under a proof of knowledge.

#ifndef CTZK_ED25519_H_
#define CTZK_ED25519_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace ctzk {

struct Ed25519PublicKey {
  std::array<uint8_t, 32> raw;
  bool operator==(const Ed25519PublicKey&) const = default;
};

struct Ed25519KeyPair {
  Ed25519PublicKey pub;
  std::array<uint8_t, 32> seed;  // private key seed
};

Ed25519KeyPair ed25519_keygen();
Ed25519KeyPair ed25519_from_seed(std::span<const uint8_t> seed);

std::vector<uint8_t> ed25519_sign(const Ed25519KeyPair& key,
                                  std::span<const uint8_t> message);
bool ed25519_verify(const Ed25519PublicKey& pub, std::span<const uint8_t> message,
                    std::span<const uint8_t> signature);

}  // namespace ctzk

#endif  // CTZK_ED25519_H_
