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

#include "ctzk/log.h"
#include "ctzk/profiles.h"

using namespace ctzk;

namespace {

SystemRandom g_rng;

const LogKeys& toy_keys() {
  static const LogKeys keys = generate_log_keys(kToyClBits, g_rng, /*toy=*/true);
  return keys;
}

Log make_log(LogMode mode = LogMode::kPi) {
  LogConfig config;
  config.mmd_ms = 1000;
  config.mode = mode;
  return Log(config, toy_keys());
}

std::vector<uint8_t> bytes_of(const std::string& s) {
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("fresh log: size 0, empty-root STH, no entry 0") {
  Log log = make_log();
  CHECK(log.size() == 0);
  SignedTreeHead sth = log.tree_head(123);
  CHECK(sth.tree_size == 0);
  CHECK(hex_encode(sth.root_hash) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(verify_tree_head(log.public_keys(), sth));
  CHECK_THROWS_AS(log.get_entry_bundle(0), std::out_of_range);
}

TEST_CASE("hash_entry is the truncated SHA-256 scalar") {
  CHECK(hash_entry({}) == Bigint("0xe3b0c44298fc1c149afbf4c8996fb92427ae41e4"));
  std::vector<uint8_t> data = bytes_of("same");
  CHECK(hash_entry(data) == hash_entry(data));
  CHECK(hash_entry(data) < pow2(160));
}

TEST_CASE("submission assigns indexes from zero and enforces time order") {
  Log log = make_log();
  SubmitOutcome first = log.submit(bytes_of("a"), 100);
  CHECK(first.entry.index == 0);
  CHECK(first.sct.timestamp == 100);
  CHECK_THROWS_AS(log.submit(bytes_of("b"), 50), std::invalid_argument);
  CHECK_THROWS_AS(log.submit(bytes_of("b"), 100), std::invalid_argument);
  SubmitOutcome second = log.submit(bytes_of("b"), 200);
  CHECK(second.entry.index == 1);
  CHECK(check_well_formed(log.all_entries()).clean());
}

TEST_CASE("side-list signatures verify against recomputed sums") {
  for (LogMode mode : {LogMode::kPi, LogMode::kPiPrime}) {
    Log log = make_log(mode);
    LogPublicKeys pub = log.public_keys();
    SubmitOutcome out = log.submit(bytes_of("entry"), 500);

    Bigint h = hash_entry(entry_tuple_bytes(out.entry));
    CHECK(cl_verify(pub.kh, h, out.signatures.sig_h));
    CHECK(cl_verify(pub.kt, entry_msg_t(mode, 500, h), out.signatures.sig_t));
    CHECK(cl_verify(pub.ki, entry_msg_i(mode, 0, h), out.signatures.sig_i));
    CHECK(verify_entry_signatures(pub, out.entry, out.signatures));

    // Plain integer sums, no modular reduction.
    if (mode == LogMode::kPi) {
      CHECK(entry_msg_t(mode, 500, h) == h + 500);
    } else {
      CHECK(entry_msg_i(mode, 1, Bigint(5)) == pow2(160) + 5);
    }
    CHECK(verify_sct(pub, out.sct));
  }
}

TEST_CASE("concatenation arithmetic for the prime variant") {
  // I = 1, H' = 5, W' = 4 gives 1*16 + 5 = 21 under a 4-bit hash width;
  // the log uses the fixed 160-bit width, checked proportionally.
  CHECK(Bigint(1) * pow2(4) + 5 == 21);
  CHECK(entry_msg_i(LogMode::kPiPrime, 1, Bigint(5)) == pow2(160) + 5);
  CHECK(entry_msg_t(LogMode::kPiPrime, 3, Bigint(7)) == 3 * pow2(160) + 7);
}

TEST_CASE("SCT body signature covers the extension signatures") {
  Log log = make_log();
  LogPublicKeys pub = log.public_keys();
  SctBundle sct = log.submit(bytes_of("covered"), 700).sct;
  REQUIRE(verify_sct(pub, sct));

  SctBundle tampered = sct;
  tampered.sig_h_ext.v = mulm(tampered.sig_h_ext.v, 2, pub.kh.n);
  CHECK_FALSE(verify_sct(pub, tampered));  // body signature no longer matches

  SctBundle wrong_t = sct;
  wrong_t.timestamp += 1;
  CHECK_FALSE(verify_sct(pub, wrong_t));
}

TEST_CASE("well-formedness reports every violation") {
  std::vector<LogEntry> good{{bytes_of("a"), 0, 10}, {bytes_of("b"), 1, 20},
                             {bytes_of("c"), 2, 30}};
  CHECK(check_well_formed(good).clean());

  std::vector<LogEntry> bad_t{{bytes_of("a"), 0, 20}, {bytes_of("b"), 1, 10}};
  WellFormedReport r1 = check_well_formed(bad_t);
  REQUIRE(r1.violations.size() == 1);
  CHECK(r1.violations[0].kind == WellFormedViolation::Kind::kTimestampOrder);

  std::vector<LogEntry> gap{{bytes_of("a"), 0, 10}, {bytes_of("b"), 2, 20}};
  WellFormedReport r2 = check_well_formed(gap);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].kind == WellFormedViolation::Kind::kIndexGap);

  std::vector<LogEntry> start{{bytes_of("a"), 1, 10}};
  WellFormedReport r3 = check_well_formed(start);
  REQUIRE(r3.violations.size() == 1);
  CHECK(r3.violations[0].kind == WellFormedViolation::Kind::kIndexStart);
}

TEST_CASE("monitor equivalence against a brute-force pairwise oracle") {
  // Exhaustive over all index/timestamp assignments for logs up to 6
  // entries drawn from small value sets.
  auto oracle = [](const std::vector<LogEntry>& entries) {
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i == 0 && entries[0].index != 0) return false;
      for (size_t j = 0; j + 1 < entries.size(); ++j) {
        if (entries[j + 1].index != entries[j].index + 1) return false;
        if (entries[j + 1].timestamp <= entries[j].timestamp) return false;
      }
    }
    return true;
  };
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<LogEntry> entries;
      for (int i = 0; i < n; ++i) {
        LogEntry e;
        e.data = bytes_of("x");
        e.index = g_rng.random_below(4).get_ui();
        if (trial % 2 == 0) e.index = i;  // bias half the trials to valid indexes
        e.timestamp = 1 + g_rng.random_below(6).get_ui();
        entries.push_back(e);
      }
      CHECK(check_well_formed(entries).clean() == oracle(entries));
    }
  }
}

TEST_CASE("append-only: prefixes never change under further submissions") {
  Log log = make_log();
  std::vector<LogEntry> snapshots;
  uint64_t t = 0;
  for (int i = 0; i < 12; ++i) {
    t += 1 + g_rng.random_below(50).get_ui();
    log.submit(bytes_of("entry-" + std::to_string(i)), t);
    std::vector<LogEntry> now = log.all_entries();
    for (size_t j = 0; j < snapshots.size(); ++j) {
      CHECK(now[j].index == snapshots[j].index);
      CHECK(now[j].timestamp == snapshots[j].timestamp);
      CHECK(now[j].data == snapshots[j].data);
    }
    snapshots = std::move(now);
  }
}

TEST_CASE("inclusion proofs verify and mutations are rejected, sizes <= 16") {
  Log log = make_log();
  for (uint64_t i = 0; i < 16; ++i) {
    log.submit(bytes_of("leaf-" + std::to_string(i)), (i + 1) * 10);
  }
  for (uint64_t size = 1; size <= 16; ++size) {
    // Rebuild a log prefix of this size from the same entries.
    std::vector<Sha256Digest> leaves;
    for (uint64_t i = 0; i < size; ++i) {
      leaves.push_back(merkle_leaf_hash(entry_leaf_bytes(log.get_entry_bundle(i).first)));
    }
    Sha256Digest root = merkle_root(leaves);
    for (uint64_t i = 0; i < size; ++i) {
      std::vector<Sha256Digest> path = merkle_audit_path(i, leaves);
      LogEntry entry = log.get_entry_bundle(i).first;
      SignedTreeHead sth;
      sth.tree_size = size;
      sth.root_hash = root;
      CHECK(verify_inclusion(sth, entry_leaf_bytes(entry), i, path));
      for (size_t node = 0; node < path.size(); ++node) {
        std::vector<Sha256Digest> bad = path;
        bad[node][0] ^= 1;
        CHECK_FALSE(verify_inclusion(sth, entry_leaf_bytes(entry), i, bad));
      }
    }
  }
  // The log's own head/path agree with the recomputation.
  SignedTreeHead sth = log.tree_head(999);
  LogEntry e5 = log.get_entry_bundle(5).first;
  CHECK(verify_inclusion(sth, entry_leaf_bytes(e5), 5, log.prove_inclusion(5)));
}

TEST_CASE("issue_sct_only leaves no entry behind") {
  Log log = make_log();
  log.submit(bytes_of("a"), 100);
  SctBundle sct = log.issue_sct_only(bytes_of("dropped"), 150);
  log.submit(bytes_of("b"), 200);
  CHECK(log.size() == 2);
  CHECK(verify_sct(log.public_keys(), sct));
  CHECK(check_well_formed(log.all_entries()).clean());
}

TEST_CASE("journal round trip restores an equivalent log") {
  Log log = make_log();
  std::vector<uint8_t> journal;
  for (int i = 0; i < 5; ++i) {
    SubmitOutcome out = log.submit(bytes_of("rec-" + std::to_string(i)), (i + 1) * 7);
    std::vector<uint8_t> rec =
        serialize_journal_record(out.entry, out.signatures, out.sct);
    journal.insert(journal.end(), rec.begin(), rec.end());
  }
  JournalContents contents = parse_journal(journal);
  REQUIRE(contents.entries.size() == 5);
  Log restored(log.config(), toy_keys(), contents.entries, contents.signatures,
               contents.scts);
  CHECK(restored.size() == 5);
  CHECK(restored.tree_head(1).root_hash == log.tree_head(1).root_hash);
  auto [entry, sigs] = restored.get_entry_bundle(3);
  CHECK(verify_entry_signatures(restored.public_keys(), entry, sigs));
  CHECK(verify_sct(restored.public_keys(), restored.sct_at(2)));

  // Submissions continue after restore.
  SubmitOutcome next = restored.submit(bytes_of("rec-5"), 100);
  CHECK(next.entry.index == 5);
}

TEST_CASE("log keys serialization round trip") {
  ByteWriter w;
  toy_keys().serialize(w);
  ByteReader r(w.data());
  LogKeys back = LogKeys::deserialize(r);
  CHECK(back.kh.pub.n == toy_keys().kh.pub.n);
  CHECK(back.ks.pub == toy_keys().ks.pub);
  CHECK(back.ki.sec.p == toy_keys().ki.sec.p);

  LogPublicKeys pub{toy_keys().kh.pub, toy_keys().kt.pub, toy_keys().ki.pub,
                    toy_keys().ks.pub, LogMode::kPi};
  ByteWriter w2;
  pub.serialize(w2);
  ByteReader r2(w2.data());
  LogPublicKeys pub_back = LogPublicKeys::deserialize(r2);
  CHECK(pub_back.digest() == pub.digest());
}
