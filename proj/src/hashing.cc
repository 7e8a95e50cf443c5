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

#include "ctzk/hashing.h"

#include <openssl/sha.h>

#include <cstring>

namespace ctzk {

namespace {

void append_u64(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void append_framed(std::vector<uint8_t>& out, std::string_view label,
                   std::span<const uint8_t> bytes) {
  append_u64(out, label.size());
  out.insert(out.end(), label.begin(), label.end());
  append_u64(out, bytes.size());
  out.insert(out.end(), bytes.begin(), bytes.end());
}

}  // namespace

Sha256Digest sha256(std::span<const uint8_t> data) {
  Sha256Digest out;
  SHA256(data.data(), data.size(), out.data());
  return out;
}

Bigint hash_scalar(std::span<const uint8_t> data, unsigned bits) {
  Sha256Digest d = sha256(data);
  Bigint v = from_bytes(d);
  // Keep the leading `bits` bits of the 256-bit digest.
  return v >> (256 - bits);
}

Transcript::Transcript(std::string_view domain_label) {
  state_.assign(32, 0);
  absorb("domain", {reinterpret_cast<const uint8_t*>(domain_label.data()),
                    domain_label.size()});
}

void Transcript::absorb(std::string_view label, std::span<const uint8_t> bytes) {
  std::vector<uint8_t> buf = state_;
  append_framed(buf, label, bytes);
  Sha256Digest d = sha256(buf);
  state_.assign(d.begin(), d.end());
}

void Transcript::absorb_int(std::string_view label, const Bigint& v) {
  absorb(label, to_bytes(v));
}

void Transcript::absorb_u64(std::string_view label, uint64_t v) {
  std::vector<uint8_t> b;
  append_u64(b, v);
  absorb(label, b);
}

Bigint Transcript::challenge(std::string_view label, unsigned bits) {
  std::vector<uint8_t> stretched;
  size_t need = (bits + 7) / 8;
  uint64_t block = 0;
  while (stretched.size() < need) {
    std::vector<uint8_t> buf = state_;
    append_framed(buf, "challenge",
                  {reinterpret_cast<const uint8_t*>(label.data()), label.size()});
    append_u64(buf, block++);
    Sha256Digest d = sha256(buf);
    stretched.insert(stretched.end(), d.begin(), d.end());
  }
  stretched.resize(need);
  Bigint v = from_bytes(stretched);
  unsigned excess = static_cast<unsigned>(need * 8 - bits);
  if (excess) v >>= excess;
  absorb("challenge-out", to_bytes(v));
  return v;
}

Sha256Digest Transcript::digest() const {
  Sha256Digest d;
  std::memcpy(d.data(), state_.data(), 32);
  return d;
}

Transcript Transcript::fork(std::string_view section) const {
  Transcript t = *this;
  t.absorb("fork", {reinterpret_cast<const uint8_t*>(section.data()),
                    section.size()});
  return t;
}

}  // namespace ctzk
