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
// The modified CT log: an append-only entry list with three signature
// side-lists (hash, index-sum, timestamp-sum), an RFC 6962 Merkle tree with
// signed tree heads and inclusion proofs, SCT issuance with extension
// signatures, and well-formedness checking for monitors.

#ifndef CTZK_LOG_H_
#define CTZK_LOG_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ctzk/bignum.h"
#include "ctzk/cl_sig.h"
#include "ctzk/ed25519.h"
#include "ctzk/encoding.h"
#include "ctzk/hashing.h"
#include "ctzk/merkle.h"
#include "ctzk/random.h"

namespace ctzk {

// Which message shape the side-list signatures cover. Pi signs arithmetic
// sums T + H(e) and I + H(e); PiPrime signs concatenations T*2^160 + H(e)
// and I*2^160 + H(e), trading an extra derivation step for plain
// collision resistance.
enum class LogMode : uint8_t { kPi = 0, kPiPrime = 1 };

struct LogConfig {
  uint64_t mmd_ms = 86'400'000;  // maximum merge delay
  uint16_t frontend_id = 0;
  unsigned lambda = 128;
  LogMode mode = LogMode::kPi;
};

struct LogEntry {
  std::vector<uint8_t> data;
  uint64_t index = 0;
  uint64_t timestamp = 0;
};

// sigma_H = Sign_kH(H(e)), sigma_T = Sign_kT(msg_t), sigma_I = Sign_kI(msg_i).
struct EntrySignatures {
  CLSignature sig_h, sig_t, sig_i;
};

struct SctBundle {
  std::vector<uint8_t> data;
  uint64_t timestamp = 0;
  uint16_t frontend_id = 0;
  CLSignature sig_t_ext;  // Sign_kT(msg_t over the SCT tuple)
  CLSignature sig_h_ext;  // Sign_kH(H(s))
  std::vector<uint8_t> body_sig;  // Sign_kS, covers the extensions

  void serialize(ByteWriter& w) const;
  static SctBundle deserialize(ByteReader& r);
  std::vector<uint8_t> bytes() const;
};

struct LogKeys {
  CLKeyPair kh, kt, ki;
  Ed25519KeyPair ks;

  void serialize(ByteWriter& w) const;
  static LogKeys deserialize(ByteReader& r);
};

struct LogPublicKeys {
  CLPublicKey kh, kt, ki;
  Ed25519PublicKey ks;
  LogMode mode = LogMode::kPi;

  void serialize(ByteWriter& w) const;
  static LogPublicKeys deserialize(ByteReader& r);
  Sha256Digest digest() const;
};

// kh/kt/ki are CL keys (they need proofs of knowledge); ks is a standard
// deterministic scheme. Toy mode permits small moduli for test suites.
LogKeys generate_log_keys(unsigned modulus_bits, RandomStream& rng, bool toy = false);

struct SignedTreeHead {
  uint64_t tree_size = 0;
  uint64_t timestamp = 0;
  Sha256Digest root_hash{};
  std::vector<uint8_t> signature;

  void serialize(ByteWriter& w) const;
  static SignedTreeHead deserialize(ByteReader& r);
};

// --- Canonical byte strings -------------------------------------------------

// Full tuple e = (m, i, t); input to the side-list hash H(e).
std::vector<uint8_t> entry_tuple_bytes(const LogEntry& entry);
// RFC 6962 leaf formatting excludes the index: version || T || len || data.
std::vector<uint8_t> entry_leaf_bytes(const LogEntry& entry);
// SCT tuple s = (m, t).
std::vector<uint8_t> sct_tuple_bytes(std::span<const uint8_t> data, uint64_t t);
// What Sign_kS covers: body plus both extension signatures.
std::vector<uint8_t> sct_signing_bytes(const SctBundle& sct);
std::vector<uint8_t> sth_signing_bytes(uint64_t tree_size, uint64_t timestamp,
                                       const Sha256Digest& root);

// SHA-256 truncated to the 160-bit hash scalar width.
Bigint hash_entry(std::span<const uint8_t> bytes);

// Signed message values for a given mode.
Bigint entry_msg_t(LogMode mode, uint64_t t, const Bigint& h);
Bigint entry_msg_i(LogMode mode, uint64_t i, const Bigint& h);

// --- Well-formedness ---------------------------------------------------------

struct WellFormedViolation {
  enum class Kind { kIndexStart, kIndexGap, kTimestampOrder };
  Kind kind;
  uint64_t at_index;  // position in the supplied slice
  std::string detail;
};

struct WellFormedReport {
  std::vector<WellFormedViolation> violations;
  bool clean() const { return violations.empty(); }
};

WellFormedReport check_well_formed(std::span<const LogEntry> entries);

// --- Signature checks used by monitors/auditors ------------------------------

bool verify_entry_signatures(const LogPublicKeys& pub, const LogEntry& entry,
                             const EntrySignatures& sigs);
bool verify_sct(const LogPublicKeys& pub, const SctBundle& sct);

// --- The log -----------------------------------------------------------------

struct SubmitOutcome {
  SctBundle sct;
  LogEntry entry;
  EntrySignatures signatures;
};

class Log {
 public:
  Log(const LogConfig& config, LogKeys keys);

  // Restores a log from persisted entries; signatures are kept verbatim.
  Log(const LogConfig& config, LogKeys keys, std::vector<LogEntry> entries,
      std::vector<EntrySignatures> signatures, std::vector<SctBundle> scts);

  // Appends (data, t). t must exceed the newest entry's timestamp.
  SubmitOutcome submit(std::span<const uint8_t> data, uint64_t t);

  // Batch append with parallel signing; entries keep the given order and
  // timestamps must be strictly increasing.
  std::vector<SubmitOutcome> submit_batch(
      std::span<const std::pair<std::vector<uint8_t>, uint64_t>> items);

  // Misbehaving-operator path: issues a valid SCT without appending the
  // entry. Exists for the exclusion-game and malicious-server harnesses.
  SctBundle issue_sct_only(std::span<const uint8_t> data, uint64_t t);

  uint64_t size() const;
  std::pair<LogEntry, EntrySignatures> get_entry_bundle(uint64_t index) const;
  SctBundle sct_at(uint64_t index) const;
  std::vector<LogEntry> all_entries() const;

  SignedTreeHead tree_head(uint64_t now_ms) const;
  std::vector<Sha256Digest> prove_inclusion(uint64_t index) const;

  // Index of the leaf whose RFC 6962 leaf hash equals `leaf_hash`.
  std::optional<uint64_t> index_by_leaf_hash(const Sha256Digest& leaf_hash) const;

  const LogConfig& config() const { return config_; }
  LogPublicKeys public_keys() const;
  const LogKeys& keys() const { return keys_; }

  // Test hook: corrupts a stored side-list signature in place.
  void corrupt_signature_for_tests(uint64_t index);

 private:
  SctBundle make_sct(std::span<const uint8_t> data, uint64_t t);
  EntrySignatures sign_entry(const LogEntry& entry);

  LogConfig config_;
  LogKeys keys_;
  mutable std::shared_mutex mu_;
  std::vector<LogEntry> entries_;
  std::vector<EntrySignatures> signatures_;
  std::vector<SctBundle> scts_;
  std::vector<Sha256Digest> leaf_hashes_;
  mutable SystemRandom rng_;
};

bool verify_tree_head(const LogPublicKeys& pub, const SignedTreeHead& sth);
bool verify_inclusion(const SignedTreeHead& sth, std::span<const uint8_t> leaf_bytes,
                      uint64_t index, std::span<const Sha256Digest> path);

// --- Journal persistence ------------------------------------------------------

std::vector<uint8_t> serialize_journal_record(const LogEntry& entry,
                                              const EntrySignatures& sigs,
                                              const SctBundle& sct);

struct JournalContents {
  std::vector<LogEntry> entries;
  std::vector<EntrySignatures> signatures;
  std::vector<SctBundle> scts;
};
// Parses a concatenation of length-prefixed records.
JournalContents parse_journal(std::span<const uint8_t> bytes);

}  // namespace ctzk

#endif  // CTZK_LOG_H_
