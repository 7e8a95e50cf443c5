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
// Short-lived certificate families: one flagged log entry carries the
// Merkle root of a whole run of daily certificates. Browsers check a
// membership path plus the daily validity window; revocation is expiry.

#ifndef CTZK_SHORTLIVED_H_
#define CTZK_SHORTLIVED_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ctzk/encoding.h"
#include "ctzk/merkle.h"

namespace ctzk {

inline constexpr uint64_t kDayMs = 86'400'000;

struct DailyCert {
  std::vector<uint8_t> base_fields;
  uint64_t not_before = 0;  // window start, inclusive
  uint64_t not_after = 0;   // window end, exclusive

  std::vector<uint8_t> bytes() const;
  static DailyCert parse(std::span<const uint8_t> data);
};

struct CertFamily {
  std::vector<DailyCert> certs;     // consecutive one-day windows
  std::vector<Sha256Digest> leaves;
  Sha256Digest root{};

  uint64_t start() const { return certs.front().not_before; }
  uint64_t end() const { return certs.back().not_after; }
};

// n_days consecutive windows starting at start_day_ms. Deterministic.
CertFamily build_family(std::span<const uint8_t> base_fields, uint64_t start_day_ms,
                        uint64_t n_days, uint64_t window_ms = kDayMs);

struct FamilyLogPayload {
  bool short_lived_flag = true;
  Sha256Digest root{};
  uint64_t validity_start = 0;
  uint64_t validity_end = 0;

  std::vector<uint8_t> bytes() const;
};
// Returns false when the bytes are not a flagged family payload.
bool parse_family_payload(std::span<const uint8_t> data, FamilyLogPayload* out);

// The single log-entry payload for a family of any size.
FamilyLogPayload family_log_payload(const CertFamily& family);

std::vector<Sha256Digest> prove_member(const CertFamily& family, uint64_t day_index);

// Accepts iff the path ties the daily certificate to the payload root and
// `now` falls inside the certificate's one-day window.
bool verify_member(const FamilyLogPayload& payload, const DailyCert& cert,
                   std::span<const Sha256Digest> path, uint64_t day_index,
                   uint64_t family_size, uint64_t now);

}  // namespace ctzk

#endif  // CTZK_SHORTLIVED_H_
