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
// The proof-of-exclusion soundness game. Phase 1: the adversary populates an
// honest log with strictly increasing timestamps and retrieves every list
// entry. Phase 2: it plays the prover against an honest verifier using a
// scripted strategy. Only a genuine exclusion may convince the verifier.

#include <stdexcept>

#include "ctzk/exclusion.h"

namespace ctzk {

namespace {

constexpr uint64_t kStep = 100;  // phase-1 timestamp spacing

struct Phase1 {
  std::vector<SubmitOutcome> outcomes;
  uint64_t rounds = 0;
};

Phase1 populate(Log& log, unsigned lambda) {
  // poly(lambda) rounds with timestamps in a poly(lambda) range.
  uint64_t rounds = std::max<uint64_t>(4, std::min<uint64_t>(64, lambda / 8));
  std::vector<std::pair<std::vector<uint8_t>, uint64_t>> items;
  for (uint64_t i = 0; i < rounds; ++i) {
    std::string data = "game-entry-" + std::to_string(i);
    items.emplace_back(std::vector<uint8_t>(data.begin(), data.end()),
                       (i + 1) * kStep);
  }
  Phase1 p1;
  p1.outcomes = log.submit_batch(items);
  p1.rounds = rounds;
  return p1;
}

ProofClaims honest_claims(const LogPublicKeys& pub, const SctBundle& y,
                          const SubmitOutcome& x, const SubmitOutcome& z) {
  (void)pub;
  ProofClaims claims;
  claims.t_x = x.entry.timestamp;
  claims.i_x = x.entry.index;
  claims.h_x = hash_entry(entry_tuple_bytes(x.entry));
  claims.t_y = y.timestamp;
  claims.h_y = hash_entry(sct_tuple_bytes(y.data, y.timestamp));
  claims.t_z = z.entry.timestamp;
  claims.i_z = z.entry.index;
  claims.h_z = hash_entry(entry_tuple_bytes(z.entry));
  claims.sig_ihx = x.signatures.sig_i;
  claims.sig_hx = x.signatures.sig_h;
  claims.sig_thx = x.signatures.sig_t;
  claims.sig_thy = y.sig_t_ext;
  claims.sig_ihz = z.signatures.sig_i;
  claims.sig_hz = z.signatures.sig_h;
  claims.sig_thz = z.signatures.sig_t;
  return claims;
}

}  // namespace

Strategy strategy_from_name(const std::string& name) {
  if (name == "honest-excluded") return Strategy::kHonestExcluded;
  if (name == "index-hash-mix") return Strategy::kIndexHashMix;
  if (name == "non-adjacent") return Strategy::kNonAdjacent;
  if (name == "reversed-timestamps") return Strategy::kReversedTimestamps;
  if (name == "replayed-sct") return Strategy::kReplayedSct;
  if (name == "forged-signature") return Strategy::kForgedSignature;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kHonestExcluded: return "honest-excluded";
    case Strategy::kIndexHashMix: return "index-hash-mix";
    case Strategy::kNonAdjacent: return "non-adjacent";
    case Strategy::kReversedTimestamps: return "reversed-timestamps";
    case Strategy::kReplayedSct: return "replayed-sct";
    case Strategy::kForgedSignature: return "forged-signature";
  }
  return "unknown";
}

const std::array<Strategy, 6>& all_strategies() {
  static const std::array<Strategy, 6> s{
      Strategy::kHonestExcluded,     Strategy::kIndexHashMix,
      Strategy::kNonAdjacent,        Strategy::kReversedTimestamps,
      Strategy::kReplayedSct,        Strategy::kForgedSignature};
  return s;
}

GameEnv make_game_env(unsigned lambda, RandomStream& rng) {
  GameEnv env;
  env.params = CommitParams::setup({.p_bits = 512, .q_bits = 400},
                                   "ctzk-game-lambda-" + std::to_string(lambda), 128);
  env.keys = generate_log_keys(512, rng, /*toy=*/true);
  env.config.mmd_ms = 1000;
  env.config.lambda = lambda;
  return env;
}

GameTranscript run_proofexcl_game(Strategy strategy, unsigned lambda,
                                  const GameEnv& env) {
  SystemRandom rng;
  Log log(env.config, env.keys);
  LogPublicKeys pub = log.public_keys();
  Phase1 p1 = populate(log, lambda);
  const auto& e = p1.outcomes;

  GameTranscript result;
  result.strategy = strategy;
  result.lambda = lambda;
  result.phase1_rounds = p1.rounds;

  ExclusionProof proof;
  switch (strategy) {
    case Strategy::kHonestExcluded: {
      // The operator drops one submission after issuing its SCT: y lands
      // between adjacent entries. Built through the honest prover path.
      size_t k = e.size() / 2;
      std::string data = "dropped-entry";
      uint64_t t_y = e[k].entry.timestamp + kStep / 2;
      SctBundle y = log.issue_sct_only(as_bytes(data), t_y);
      // Remaining phase-1 style rounds continue after the drop.
      std::string tail = "game-entry-tail";
      log.submit(as_bytes(tail), (p1.rounds + 1) * kStep);
      ProverWitness witness;
      witness.y = y;
      witness.x = e[k].entry;
      witness.x_sigs = e[k].signatures;
      witness.z = e[k + 1].entry;
      witness.z_sigs = e[k + 1].signatures;
      witness.mmd_ms = env.config.mmd_ms;
      witness.sth = log.tree_head(t_y + env.config.mmd_ms + 1);
      proof = build_exclusion_proof(env.params, pub, witness, rng);
      break;
    }
    case Strategy::kIndexHashMix: {
      // Pair e1's signed sums with e0's hash: the signed values exist in the
      // side lists, but adjacency then needs a hash near-collision.
      ProofClaims claims = honest_claims(pub, e[2].sct, e[1], e[2]);
      Bigint h0 = hash_entry(entry_tuple_bytes(e[0].entry));
      Bigint h1 = hash_entry(entry_tuple_bytes(e[1].entry));
      claims.h_x = h0;
      claims.i_x = Bigint(e[1].entry.index) + h1 - h0;
      claims.t_x = Bigint(e[1].entry.timestamp) + h1 - h0;
      claims.t_y = e[2].sct.timestamp;
      proof = build_from_claims(env.params, pub, claims, rng);
      break;
    }
    case Strategy::kNonAdjacent: {
      // x = e0 and z = e2 sandwich e1's SCT, but their indexes differ by 2.
      ProofClaims claims = honest_claims(pub, e[1].sct, e[0], e[2]);
      proof = build_from_claims(env.params, pub, claims, rng);
      break;
    }
    case Strategy::kReversedTimestamps: {
      // SCT predates x: p2 = T_y - T_x is not positive.
      ProofClaims claims = honest_claims(pub, e[0].sct, e[1], e[2]);
      proof = build_from_claims(env.params, pub, claims, rng);
      break;
    }
    case Strategy::kReplayedSct: {
      // The SCT's entry is present: T_y equals T_z, so p1 = 0.
      ProofClaims claims = honest_claims(pub, e[1].sct, e[0], e[1]);
      proof = build_from_claims(env.params, pub, claims, rng);
      break;
    }
    case Strategy::kForgedSignature: {
      // Timestamp-valid sandwich but the SCT signature is fabricated.
      ProofClaims claims = honest_claims(pub, e[1].sct, e[1], e[2]);
      std::string fake = "forged-sct";
      claims.t_y = e[1].entry.timestamp + kStep / 2;
      claims.h_y = hash_entry(sct_tuple_bytes(as_bytes(fake), claims.t_y.get_ui()));
      claims.sig_thy.e = pow2(pub.kt.profile.e_bits - 1) + 1;
      claims.sig_thy.s = rng.random_bits(pub.kt.profile.s_bits());
      claims.sig_thy.v = rng.random_below(pub.kt.n);
      proof = build_from_claims(env.params, pub, claims, rng);
      break;
    }
  }

  VerifyOutcome outcome = verify_exclusion_proof(env.params, pub, proof);
  result.bit = outcome.accepted ? 1 : 0;
  result.reason = outcome.reason;
  return result;
}

GameTranscript run_proofexcl_game(Strategy strategy, unsigned lambda) {
  SystemRandom rng;
  GameEnv env = make_game_env(lambda, rng);
  return run_proofexcl_game(strategy, lambda, env);
}

}  // namespace ctzk
