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

#include "ctzk/ed25519.h"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <memory>
#include <stdexcept>

namespace ctzk {

namespace {

using EvpKeyPtr = std::unique_ptr<EVP_PKEY, decltype(&EVP_PKEY_free)>;
using EvpCtxPtr = std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)>;

EvpKeyPtr private_key(const Ed25519KeyPair& key) {
  EVP_PKEY* pkey = EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr,
                                                key.seed.data(), key.seed.size());
  if (!pkey) throw std::runtime_error("ed25519: bad private key");
  return {pkey, EVP_PKEY_free};
}

}  // namespace

Ed25519KeyPair ed25519_from_seed(std::span<const uint8_t> seed) {
  if (seed.size() != 32) throw std::invalid_argument("ed25519: seed must be 32 bytes");
  Ed25519KeyPair kp;
  std::copy(seed.begin(), seed.end(), kp.seed.begin());
  EvpKeyPtr pkey(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr,
                                              kp.seed.data(), kp.seed.size()),
                 EVP_PKEY_free);
  if (!pkey) throw std::runtime_error("ed25519: key derivation failed");
  size_t len = kp.pub.raw.size();
  if (EVP_PKEY_get_raw_public_key(pkey.get(), kp.pub.raw.data(), &len) != 1 ||
      len != 32) {
    throw std::runtime_error("ed25519: public key extraction failed");
  }
  return kp;
}

Ed25519KeyPair ed25519_keygen() {
  std::array<uint8_t, 32> seed;
  if (RAND_bytes(seed.data(), seed.size()) != 1) {
    throw std::runtime_error("ed25519: RNG failure");
  }
  return ed25519_from_seed(seed);
}

std::vector<uint8_t> ed25519_sign(const Ed25519KeyPair& key,
                                  std::span<const uint8_t> message) {
  EvpKeyPtr pkey = private_key(key);
  EvpCtxPtr ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, pkey.get()) != 1) {
    throw std::runtime_error("ed25519: sign init failed");
  }
  size_t len = 64;
  std::vector<uint8_t> sig(len);
  if (EVP_DigestSign(ctx.get(), sig.data(), &len, message.data(), message.size()) != 1) {
    throw std::runtime_error("ed25519: sign failed");
  }
  sig.resize(len);
  return sig;
}

bool ed25519_verify(const Ed25519PublicKey& pub, std::span<const uint8_t> message,
                    std::span<const uint8_t> signature) {
  EvpKeyPtr pkey(EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr,
                                             pub.raw.data(), pub.raw.size()),
                 EVP_PKEY_free);
  if (!pkey) return false;
  EvpCtxPtr ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx ||
      EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, pkey.get()) != 1) {
    return false;
  }
  return EVP_DigestVerify(ctx.get(), signature.data(), signature.size(),
                          message.data(), message.size()) == 1;
}

}  // namespace ctzk
