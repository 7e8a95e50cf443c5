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

#include "ctzk/shortlived.h"

#include <stdexcept>

namespace ctzk {

namespace {
constexpr uint8_t kDailyVersion = 1;
constexpr uint8_t kFamilyVersion = 1;
constexpr uint8_t kFamilyTag = 'F';
}  // namespace

std::vector<uint8_t> DailyCert::bytes() const {
  ByteWriter w;
  w.put_u8(kDailyVersion);
  w.put_u64(not_before);
  w.put_u64(not_after);
  w.put_blob(base_fields);
  return w.take();
}

DailyCert DailyCert::parse(std::span<const uint8_t> data) {
  ByteReader r(data);
  if (r.get_u8() != kDailyVersion) throw ParseError("daily cert: bad version");
  DailyCert cert;
  cert.not_before = r.get_u64();
  cert.not_after = r.get_u64();
  cert.base_fields = r.get_blob();
  r.expect_done();
  return cert;
}

CertFamily build_family(std::span<const uint8_t> base_fields, uint64_t start_day_ms,
                        uint64_t n_days, uint64_t window_ms) {
  if (n_days == 0) throw std::invalid_argument("build_family: n_days must be >= 1");
  if (window_ms == 0) throw std::invalid_argument("build_family: empty window");
  CertFamily family;
  family.certs.reserve(n_days);
  std::vector<std::vector<uint8_t>> leaf_inputs;
  leaf_inputs.reserve(n_days);
  for (uint64_t i = 0; i < n_days; ++i) {
    DailyCert cert;
    cert.base_fields.assign(base_fields.begin(), base_fields.end());
    cert.not_before = start_day_ms + i * window_ms;
    cert.not_after = start_day_ms + (i + 1) * window_ms;
    leaf_inputs.push_back(cert.bytes());
    family.certs.push_back(std::move(cert));
  }
  family.leaves = merkle_hash_leaves(leaf_inputs);
  family.root = merkle_root(family.leaves);
  return family;
}

std::vector<uint8_t> FamilyLogPayload::bytes() const {
  ByteWriter w;
  w.put_u8(kFamilyVersion);
  w.put_u8(kFamilyTag);
  w.put_u8(short_lived_flag ? 1 : 0);
  w.put_bytes(root);
  w.put_u64(validity_start);
  w.put_u64(validity_end);
  return w.take();
}

bool parse_family_payload(std::span<const uint8_t> data, FamilyLogPayload* out) {
  try {
    ByteReader r(data);
    if (r.get_u8() != kFamilyVersion || r.get_u8() != kFamilyTag) return false;
    out->short_lived_flag = r.get_u8() != 0;
    std::vector<uint8_t> root = r.get_bytes(32);
    std::copy(root.begin(), root.end(), out->root.begin());
    out->validity_start = r.get_u64();
    out->validity_end = r.get_u64();
    r.expect_done();
    return out->short_lived_flag;
  } catch (const ParseError&) {
    return false;
  }
}

FamilyLogPayload family_log_payload(const CertFamily& family) {
  FamilyLogPayload payload;
  payload.short_lived_flag = true;
  payload.root = family.root;
  payload.validity_start = family.start();
  payload.validity_end = family.end();
  return payload;
}

std::vector<Sha256Digest> prove_member(const CertFamily& family, uint64_t day_index) {
  if (day_index >= family.leaves.size()) {
    throw std::out_of_range("prove_member: day index out of range");
  }
  return merkle_audit_path(day_index, family.leaves);
}

bool verify_member(const FamilyLogPayload& payload, const DailyCert& cert,
                   std::span<const Sha256Digest> path, uint64_t day_index,
                   uint64_t family_size, uint64_t now) {
  if (!payload.short_lived_flag) return false;
  if (now < cert.not_before || now >= cert.not_after) return false;
  Sha256Digest leaf = merkle_leaf_hash(cert.bytes());
  return merkle_verify_inclusion(payload.root, day_index, family_size, leaf, path);
}

}  // namespace ctzk
