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

#include "ctzk/log.h"

#include <stdexcept>

#include "ctzk/parallel.h"

namespace ctzk {

namespace {

constexpr uint8_t kEntryTupleVersion = 1;
constexpr uint8_t kLeafVersion = 1;
constexpr uint8_t kSctTupleVersion = 1;
constexpr uint8_t kSctVersion = 1;
constexpr uint8_t kSthVersion = 1;
constexpr uint8_t kKeysVersion = 1;
constexpr uint8_t kPubKeysVersion = 1;
constexpr uint8_t kJournalVersion = 1;

void check_mode(uint8_t v) {
  if (v > 1) throw ParseError("bad log mode");
}

}  // namespace

std::vector<uint8_t> entry_tuple_bytes(const LogEntry& entry) {
  ByteWriter w;
  w.put_u8(kEntryTupleVersion);
  w.put_u8('E');
  w.put_u64(entry.index);
  w.put_u64(entry.timestamp);
  w.put_blob(entry.data);
  return w.take();
}

std::vector<uint8_t> entry_leaf_bytes(const LogEntry& entry) {
  ByteWriter w;
  w.put_u8(kLeafVersion);
  w.put_u8('L');
  w.put_u64(entry.timestamp);
  w.put_blob(entry.data);
  return w.take();
}

std::vector<uint8_t> sct_tuple_bytes(std::span<const uint8_t> data, uint64_t t) {
  ByteWriter w;
  w.put_u8(kSctTupleVersion);
  w.put_u8('S');
  w.put_u64(t);
  w.put_blob(data);
  return w.take();
}

std::vector<uint8_t> sct_signing_bytes(const SctBundle& sct) {
  ByteWriter w;
  w.put_u8(kSctVersion);
  w.put_u8('B');
  w.put_u16(sct.frontend_id);
  w.put_u64(sct.timestamp);
  w.put_blob(sct.data);
  ByteWriter ext;
  sct.sig_t_ext.serialize(ext);
  sct.sig_h_ext.serialize(ext);
  w.put_blob(ext.data());
  return w.take();
}

std::vector<uint8_t> sth_signing_bytes(uint64_t tree_size, uint64_t timestamp,
                                       const Sha256Digest& root) {
  ByteWriter w;
  w.put_u8(kSthVersion);
  w.put_u8('H');
  w.put_u64(tree_size);
  w.put_u64(timestamp);
  w.put_bytes(root);
  return w.take();
}

Bigint hash_entry(std::span<const uint8_t> bytes) {
  return hash_scalar(bytes, kHashScalarBits);
}

Bigint entry_msg_t(LogMode mode, uint64_t t, const Bigint& h) {
  if (mode == LogMode::kPi) return Bigint(t) + h;
  return Bigint(t) * pow2(kHashScalarBits) + h;
}

Bigint entry_msg_i(LogMode mode, uint64_t i, const Bigint& h) {
  if (mode == LogMode::kPi) return Bigint(i) + h;
  return Bigint(i) * pow2(kHashScalarBits) + h;
}

// --- Serialization -----------------------------------------------------------

void SctBundle::serialize(ByteWriter& w) const {
  w.put_u8(kSctVersion);
  w.put_u16(frontend_id);
  w.put_u64(timestamp);
  w.put_blob(data);
  sig_t_ext.serialize(w);
  sig_h_ext.serialize(w);
  w.put_blob(body_sig);
}

SctBundle SctBundle::deserialize(ByteReader& r) {
  if (r.get_u8() != kSctVersion) throw ParseError("sct: bad version");
  SctBundle sct;
  sct.frontend_id = r.get_u16();
  sct.timestamp = r.get_u64();
  sct.data = r.get_blob();
  sct.sig_t_ext = CLSignature::deserialize(r);
  sct.sig_h_ext = CLSignature::deserialize(r);
  sct.body_sig = r.get_blob();
  return sct;
}

std::vector<uint8_t> SctBundle::bytes() const {
  ByteWriter w;
  serialize(w);
  return w.take();
}

void LogKeys::serialize(ByteWriter& w) const {
  w.put_u8(kKeysVersion);
  for (const CLKeyPair* kp : {&kh, &kt, &ki}) {
    kp->pub.serialize(w);
    w.put_int(kp->sec.p);
    w.put_int(kp->sec.q);
  }
  w.put_bytes(ks.seed);
}

LogKeys LogKeys::deserialize(ByteReader& r) {
  if (r.get_u8() != kKeysVersion) throw ParseError("log keys: bad version");
  LogKeys keys;
  for (CLKeyPair* kp : {&keys.kh, &keys.kt, &keys.ki}) {
    kp->pub = CLPublicKey::deserialize(r);
    kp->sec.p = r.get_int();
    kp->sec.q = r.get_int();
  }
  std::vector<uint8_t> seed = r.get_bytes(32);
  keys.ks = ed25519_from_seed(seed);
  return keys;
}

void LogPublicKeys::serialize(ByteWriter& w) const {
  w.put_u8(kPubKeysVersion);
  w.put_u8(static_cast<uint8_t>(mode));
  kh.serialize(w);
  kt.serialize(w);
  ki.serialize(w);
  w.put_bytes(ks.raw);
}

LogPublicKeys LogPublicKeys::deserialize(ByteReader& r) {
  if (r.get_u8() != kPubKeysVersion) throw ParseError("log pubkeys: bad version");
  LogPublicKeys pub;
  uint8_t mode = r.get_u8();
  check_mode(mode);
  pub.mode = static_cast<LogMode>(mode);
  pub.kh = CLPublicKey::deserialize(r);
  pub.kt = CLPublicKey::deserialize(r);
  pub.ki = CLPublicKey::deserialize(r);
  std::vector<uint8_t> raw = r.get_bytes(32);
  std::copy(raw.begin(), raw.end(), pub.ks.raw.begin());
  return pub;
}

Sha256Digest LogPublicKeys::digest() const {
  ByteWriter w;
  serialize(w);
  return sha256(w.data());
}

LogKeys generate_log_keys(unsigned modulus_bits, RandomStream& rng, bool toy) {
  LogKeys keys;
  keys.kh = cl_keygen(modulus_bits, rng, toy);
  keys.kt = cl_keygen(modulus_bits, rng, toy);
  keys.ki = cl_keygen(modulus_bits, rng, toy);
  keys.ks = ed25519_keygen();
  return keys;
}

void SignedTreeHead::serialize(ByteWriter& w) const {
  w.put_u8(kSthVersion);
  w.put_u64(tree_size);
  w.put_u64(timestamp);
  w.put_bytes(root_hash);
  w.put_blob(signature);
}

SignedTreeHead SignedTreeHead::deserialize(ByteReader& r) {
  if (r.get_u8() != kSthVersion) throw ParseError("sth: bad version");
  SignedTreeHead sth;
  sth.tree_size = r.get_u64();
  sth.timestamp = r.get_u64();
  std::vector<uint8_t> root = r.get_bytes(32);
  std::copy(root.begin(), root.end(), sth.root_hash.begin());
  sth.signature = r.get_blob();
  return sth;
}

// --- Well-formedness ----------------------------------------------------------

WellFormedReport check_well_formed(std::span<const LogEntry> entries) {
  WellFormedReport report;
  for (size_t i = 0; i < entries.size(); ++i) {
    const LogEntry& e = entries[i];
    if (i == 0) {
      if (e.index != 0) {
        report.violations.push_back({WellFormedViolation::Kind::kIndexStart, 0,
                                     "first index is " + std::to_string(e.index)});
      }
      continue;
    }
    const LogEntry& prev = entries[i - 1];
    if (e.index != prev.index + 1) {
      report.violations.push_back(
          {WellFormedViolation::Kind::kIndexGap, static_cast<uint64_t>(i),
           "index " + std::to_string(e.index) + " follows " +
               std::to_string(prev.index)});
    }
    if (e.timestamp <= prev.timestamp) {
      report.violations.push_back(
          {WellFormedViolation::Kind::kTimestampOrder, static_cast<uint64_t>(i),
           "timestamp " + std::to_string(e.timestamp) + " follows " +
               std::to_string(prev.timestamp)});
    }
  }
  return report;
}

bool verify_entry_signatures(const LogPublicKeys& pub, const LogEntry& entry,
                             const EntrySignatures& sigs) {
  Bigint h = hash_entry(entry_tuple_bytes(entry));
  return cl_verify(pub.kh, h, sigs.sig_h) &&
         cl_verify(pub.kt, entry_msg_t(pub.mode, entry.timestamp, h), sigs.sig_t) &&
         cl_verify(pub.ki, entry_msg_i(pub.mode, entry.index, h), sigs.sig_i);
}

bool verify_sct(const LogPublicKeys& pub, const SctBundle& sct) {
  if (!ed25519_verify(pub.ks, sct_signing_bytes(sct), sct.body_sig)) return false;
  Bigint h = hash_entry(sct_tuple_bytes(sct.data, sct.timestamp));
  return cl_verify(pub.kh, h, sct.sig_h_ext) &&
         cl_verify(pub.kt, entry_msg_t(pub.mode, sct.timestamp, h), sct.sig_t_ext);
}

// --- Log ----------------------------------------------------------------------

Log::Log(const LogConfig& config, LogKeys keys)
    : config_(config), keys_(std::move(keys)) {}

Log::Log(const LogConfig& config, LogKeys keys, std::vector<LogEntry> entries,
         std::vector<EntrySignatures> signatures, std::vector<SctBundle> scts)
    : config_(config),
      keys_(std::move(keys)),
      entries_(std::move(entries)),
      signatures_(std::move(signatures)),
      scts_(std::move(scts)) {
  if (entries_.size() != signatures_.size() || entries_.size() != scts_.size()) {
    throw std::invalid_argument("log restore: entry/signature count mismatch");
  }
  leaf_hashes_.reserve(entries_.size());
  for (const LogEntry& e : entries_) {
    leaf_hashes_.push_back(merkle_leaf_hash(entry_leaf_bytes(e)));
  }
}

SctBundle Log::make_sct(std::span<const uint8_t> data, uint64_t t) {
  SctBundle sct;
  sct.data.assign(data.begin(), data.end());
  sct.timestamp = t;
  sct.frontend_id = config_.frontend_id;
  Bigint h = hash_entry(sct_tuple_bytes(sct.data, t));
  sct.sig_t_ext =
      cl_sign(keys_.kt.sec, keys_.kt.pub, entry_msg_t(config_.mode, t, h), rng_);
  sct.sig_h_ext = cl_sign(keys_.kh.sec, keys_.kh.pub, h, rng_);
  // The body signature covers the extension signatures, so they are
  // produced first.
  sct.body_sig = ed25519_sign(keys_.ks, sct_signing_bytes(sct));
  return sct;
}

EntrySignatures Log::sign_entry(const LogEntry& entry) {
  Bigint h = hash_entry(entry_tuple_bytes(entry));
  EntrySignatures sigs;
  sigs.sig_h = cl_sign(keys_.kh.sec, keys_.kh.pub, h, rng_);
  sigs.sig_t = cl_sign(keys_.kt.sec, keys_.kt.pub,
                       entry_msg_t(config_.mode, entry.timestamp, h), rng_);
  sigs.sig_i = cl_sign(keys_.ki.sec, keys_.ki.pub,
                       entry_msg_i(config_.mode, entry.index, h), rng_);
  return sigs;
}

SubmitOutcome Log::submit(std::span<const uint8_t> data, uint64_t t) {
  std::unique_lock lock(mu_);
  if (!entries_.empty() && t <= entries_.back().timestamp) {
    throw std::invalid_argument("submit: timestamp not strictly increasing");
  }
  SubmitOutcome out;
  out.entry.data.assign(data.begin(), data.end());
  out.entry.index = entries_.size();
  out.entry.timestamp = t;
  out.sct = make_sct(data, t);
  out.signatures = sign_entry(out.entry);
  entries_.push_back(out.entry);
  signatures_.push_back(out.signatures);
  scts_.push_back(out.sct);
  leaf_hashes_.push_back(merkle_leaf_hash(entry_leaf_bytes(out.entry)));
  return out;
}

std::vector<SubmitOutcome> Log::submit_batch(
    std::span<const std::pair<std::vector<uint8_t>, uint64_t>> items) {
  std::unique_lock lock(mu_);
  std::optional<uint64_t> last;
  if (!entries_.empty()) last = entries_.back().timestamp;
  for (const auto& [data, t] : items) {
    (void)data;
    if (last && t <= *last) {
      throw std::invalid_argument("submit_batch: timestamps not increasing");
    }
    last = t;
  }
  uint64_t base = entries_.size();
  std::vector<SubmitOutcome> out(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    out[i].entry.data = items[i].first;
    out[i].entry.index = base + i;
    out[i].entry.timestamp = items[i].second;
  }
  parallel::for_range(static_cast<int64_t>(items.size()), [&](int64_t i) {
    out[i].sct = make_sct(out[i].entry.data, out[i].entry.timestamp);
    out[i].signatures = sign_entry(out[i].entry);
  });
  for (SubmitOutcome& o : out) {
    entries_.push_back(o.entry);
    signatures_.push_back(o.signatures);
    scts_.push_back(o.sct);
    leaf_hashes_.push_back(merkle_leaf_hash(entry_leaf_bytes(o.entry)));
  }
  return out;
}

SctBundle Log::issue_sct_only(std::span<const uint8_t> data, uint64_t t) {
  std::unique_lock lock(mu_);
  if (!entries_.empty() && t <= entries_.back().timestamp) {
    throw std::invalid_argument("issue_sct_only: timestamp not strictly increasing");
  }
  return make_sct(data, t);
}

uint64_t Log::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

std::pair<LogEntry, EntrySignatures> Log::get_entry_bundle(uint64_t index) const {
  std::shared_lock lock(mu_);
  if (index >= entries_.size()) {
    throw std::out_of_range("get_entry_bundle: index out of range");
  }
  return {entries_[index], signatures_[index]};
}

SctBundle Log::sct_at(uint64_t index) const {
  std::shared_lock lock(mu_);
  if (index >= scts_.size()) throw std::out_of_range("sct_at: index out of range");
  return scts_[index];
}

std::vector<LogEntry> Log::all_entries() const {
  std::shared_lock lock(mu_);
  return entries_;
}

SignedTreeHead Log::tree_head(uint64_t now_ms) const {
  std::shared_lock lock(mu_);
  SignedTreeHead sth;
  sth.tree_size = entries_.size();
  sth.timestamp = now_ms;
  sth.root_hash = merkle_root(leaf_hashes_);
  sth.signature = ed25519_sign(
      keys_.ks, sth_signing_bytes(sth.tree_size, sth.timestamp, sth.root_hash));
  return sth;
}

std::vector<Sha256Digest> Log::prove_inclusion(uint64_t index) const {
  std::shared_lock lock(mu_);
  if (index >= leaf_hashes_.size()) {
    throw std::out_of_range("prove_inclusion: index out of range");
  }
  return merkle_audit_path(index, leaf_hashes_);
}

std::optional<uint64_t> Log::index_by_leaf_hash(const Sha256Digest& leaf_hash) const {
  std::shared_lock lock(mu_);
  for (size_t i = 0; i < leaf_hashes_.size(); ++i) {
    if (leaf_hashes_[i] == leaf_hash) return i;
  }
  return std::nullopt;
}

LogPublicKeys Log::public_keys() const {
  LogPublicKeys pub;
  pub.kh = keys_.kh.pub;
  pub.kt = keys_.kt.pub;
  pub.ki = keys_.ki.pub;
  pub.ks = keys_.ks.pub;
  pub.mode = config_.mode;
  return pub;
}

void Log::corrupt_signature_for_tests(uint64_t index) {
  std::unique_lock lock(mu_);
  signatures_.at(index).sig_i.v += 1;
}

bool verify_tree_head(const LogPublicKeys& pub, const SignedTreeHead& sth) {
  return ed25519_verify(
      pub.ks, sth_signing_bytes(sth.tree_size, sth.timestamp, sth.root_hash),
      sth.signature);
}

bool verify_inclusion(const SignedTreeHead& sth, std::span<const uint8_t> leaf_bytes,
                      uint64_t index, std::span<const Sha256Digest> path) {
  return merkle_verify_inclusion(sth.root_hash, index, sth.tree_size,
                                 merkle_leaf_hash(leaf_bytes), path);
}

// --- Journal -------------------------------------------------------------------

std::vector<uint8_t> serialize_journal_record(const LogEntry& entry,
                                              const EntrySignatures& sigs,
                                              const SctBundle& sct) {
  ByteWriter rec;
  rec.put_u8(kJournalVersion);
  rec.put_u64(entry.index);
  rec.put_u64(entry.timestamp);
  rec.put_blob(entry.data);
  sigs.sig_h.serialize(rec);
  sigs.sig_t.serialize(rec);
  sigs.sig_i.serialize(rec);
  sct.serialize(rec);
  ByteWriter framed;
  framed.put_blob(rec.data());
  return framed.take();
}

JournalContents parse_journal(std::span<const uint8_t> bytes) {
  JournalContents out;
  ByteReader outer(bytes);
  while (!outer.done()) {
    std::vector<uint8_t> rec = outer.get_blob();
    ByteReader r(rec);
    if (r.get_u8() != kJournalVersion) throw ParseError("journal: bad version");
    LogEntry e;
    e.index = r.get_u64();
    e.timestamp = r.get_u64();
    e.data = r.get_blob();
    EntrySignatures s;
    s.sig_h = CLSignature::deserialize(r);
    s.sig_t = CLSignature::deserialize(r);
    s.sig_i = CLSignature::deserialize(r);
    SctBundle sct = SctBundle::deserialize(r);
    r.expect_done();
    out.entries.push_back(std::move(e));
    out.signatures.push_back(std::move(s));
    out.scts.push_back(std::move(sct));
  }
  return out;
}

}  // namespace ctzk
