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
// Auditor/monitor client. Every query an auditor makes is also a query a
// monitor makes, so an uncooperative log cannot tell proof-building traffic
// apart from routine sweeps.

#ifndef CTZK_CLIENT_H_
#define CTZK_CLIENT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctzk/log.h"

namespace ctzk {

struct EntryRecord {
  LogEntry entry;
  EntrySignatures signatures;
  SctBundle sct;
};

// Raised when the log refuses or omits the records the client needs.
class LogUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonitorReport {
  uint64_t tree_size = 0;
  bool sth_signature_ok = false;
  bool root_consistent = false;  // recomputed root matches the served STH
  WellFormedReport well_formed;
  std::vector<uint64_t> unavailable_indexes;
  std::vector<uint64_t> bad_signature_indexes;

  bool clean() const {
    return sth_signature_ok && root_consistent && well_formed.clean() &&
           unavailable_indexes.empty() && bad_signature_indexes.empty();
  }
};

class LogClient {
 public:
  explicit LogClient(const std::string& base_url);
  ~LogClient();

  SignedTreeHead get_sth();
  SctBundle add_entry(std::span<const uint8_t> data,
                      std::optional<uint64_t> timestamp = std::nullopt);
  // Closed range [start, end]; the server may omit records it withholds.
  std::vector<EntryRecord> get_entries(uint64_t start, uint64_t end);
  std::optional<EntryRecord> get_entry(uint64_t index);
  // Returns std::nullopt when the endpoint refuses (4xx refusal status).
  std::optional<std::vector<EntryRecord>> entries_around_timestamp(uint64_t t,
                                                                   uint64_t count);
  std::pair<uint64_t, std::vector<Sha256Digest>> get_proof_by_hash(
      const Sha256Digest& leaf_hash, uint64_t tree_size);

  // The adjacent pair (x, z) with T_x < t_y < T_z and I_z = I_x + 1. Falls
  // back to a binary search over index queries when the timestamp endpoint
  // refuses. Throws LogUnavailable when the pair cannot be retrieved and
  // std::out_of_range when t_y is outside the log or hits an entry exactly.
  std::pair<EntryRecord, EntryRecord> fetch_neighbors(uint64_t t_y);

  // Full download: well-formedness, every side signature, root consistency.
  MonitorReport monitor_sweep(const LogPublicKeys& pub);

  // Index-style queries issued so far (get-entries fetches).
  uint64_t index_query_count() const { return index_queries_; }
  void reset_counters() { index_queries_ = 0; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  uint64_t index_queries_ = 0;
};

}  // namespace ctzk

#endif  // CTZK_CLIENT_H_
