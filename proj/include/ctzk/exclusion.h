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
// Zero-knowledge proof that an SCT's timestamp falls strictly between two
// adjacent log entries, hence its entry is missing from the log. The prover
// commits to the timestamps, indexes and hashes of the SCT y and the two
// straddling entries x and z, proves knowledge of the log's signatures on
// the committed sums, and proves adjacency (I_x + 1 = I_z) plus ordering
// (T_z - T_y > 0 and T_y - T_x > 0) on the commitments alone.
//
// Variants: the concatenation mode replaces the signed sums with
// T*2^160 + H(e); the actionable form reveals H(y) (commitment randomness
// zero) so verifiers can distribute a blacklist hash.

#ifndef CTZK_EXCLUSION_H_
#define CTZK_EXCLUSION_H_

#include <array>
#include <optional>
#include <string>

#include "ctzk/cl_sig.h"
#include "ctzk/log.h"
#include "ctzk/pedersen.h"

namespace ctzk {

struct ExclusionProof {
  LogMode mode = LogMode::kPi;
  bool actionable = false;

  // Step-1 value commitments, paper order.
  Commitment c_tx, c_hx, c_ix, c_hy, c_ty, c_tz, c_hz, c_iz;
  Commitment c_one;
  Bigint r_one;                // revealed randomness of c_one
  Bigint revealed_hy;          // actionable only; c_hy is then g^revealed_hy

  // Proofs of knowledge of the seven signatures, in protocol order:
  // I_x+H(x), H(x), T_x+H(x), T_y+H(y), I_z+H(z), H(z), T_z+H(z).
  // Each carries its blinded signature element.
  std::array<SigPoK, 7> poks;

  EqProof adjacency;           // I_x + 1 = I_z
  RangeProof range_p1;         // T_z - T_y in [1, 2^64)
  RangeProof range_p2;         // T_y - T_x in [1, 2^64)

  Sha256Digest tag{};          // binds the statement context

  void serialize(ByteWriter& w) const;
  static ExclusionProof deserialize(ByteReader& r);
  std::vector<uint8_t> bytes() const;
};

// Byte counts per wire section, for the inspect command.
struct ProofSectionSizes {
  size_t header = 0;
  size_t commitments = 0;
  size_t sig_poks = 0;
  size_t equality = 0;
  size_t ranges = 0;
  size_t tag = 0;
  size_t total() const {
    return header + commitments + sig_poks + equality + ranges + tag;
  }
};
ProofSectionSizes measure_proof_sections(const ExclusionProof& proof);

struct ProverWitness {
  SctBundle y;
  LogEntry x, z;
  EntrySignatures x_sigs, z_sigs;
  SignedTreeHead sth;  // newest tree head the prover has seen
  uint64_t mmd_ms = 0;
};

enum class RejectReason {
  kOk = 0,
  kMalformed,
  kOpening,
  kDerive,
  kPok1,
  kPok2,
  kPok3,
  kPok4,
  kPok5,
  kPok6,
  kPok7,
  kEq,
  kRange1,
  kRange2,
};
std::string reject_reason_name(RejectReason r);

struct VerifyTimings {
  double opening_ms = 0;
  double derive_ms = 0;
  double poks_ms = 0;       // all SigPoK verifications
  double arithmetic_ms = 0; // step-4 combinations
  double eq_ms = 0;
  double ranges_ms = 0;
  double total_ms = 0;
};

struct VerifyOutcome {
  bool accepted = false;
  RejectReason reason = RejectReason::kMalformed;
  std::optional<Bigint> revealed_hy;  // set on actionable accept
};

// Throws std::invalid_argument when the witness violates a precondition:
// non-adjacent entries, timestamp ordering, an invalid signature, or an MMD
// that has not yet elapsed against the supplied tree head.
ExclusionProof build_exclusion_proof(const CommitParams& params,
                                     const LogPublicKeys& pub,
                                     const ProverWitness& witness, RandomStream& rng,
                                     bool actionable = false);

VerifyOutcome verify_exclusion_proof(const CommitParams& params,
                                     const LogPublicKeys& pub,
                                     const ExclusionProof& proof,
                                     VerifyTimings* timings = nullptr);

bool match_sct_hash(const Bigint& h_revealed, const SctBundle& sct);

// --- Adversarial interface (exclusion-game harness and soundness tests) -----
//
// Builds a transcript-shaped proof from arbitrary claimed values without any
// precondition checks. Cheating claims yield proofs whose sub-checks fail.
struct ProofClaims {
  Bigint t_x, h_x, i_x;
  Bigint t_y, h_y;
  Bigint t_z, h_z, i_z;
  CLSignature sig_ihx, sig_hx, sig_thx;
  CLSignature sig_thy;
  CLSignature sig_ihz, sig_hz, sig_thz;
};

ExclusionProof build_from_claims(const CommitParams& params, const LogPublicKeys& pub,
                                 const ProofClaims& claims, RandomStream& rng,
                                 bool actionable = false);

// --- ProofExcl game -----------------------------------------------------------

enum class Strategy {
  kHonestExcluded,
  kIndexHashMix,
  kNonAdjacent,
  kReversedTimestamps,
  kReplayedSct,
  kForgedSignature,
};

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);
const std::array<Strategy, 6>& all_strategies();

struct GameEnv {
  CommitParams params;
  LogKeys keys;
  LogConfig config;
};

// Toy-scale environment (small CL keys and commitment group).
GameEnv make_game_env(unsigned lambda, RandomStream& rng);

struct GameTranscript {
  Strategy strategy;
  unsigned lambda = 0;
  uint64_t phase1_rounds = 0;
  int bit = 0;  // verifier output
  RejectReason reason = RejectReason::kOk;
};

GameTranscript run_proofexcl_game(Strategy strategy, unsigned lambda,
                                  const GameEnv& env);
// Convenience form that builds a fresh toy environment.
GameTranscript run_proofexcl_game(Strategy strategy, unsigned lambda);

}  // namespace ctzk

#endif  // CTZK_EXCLUSION_H_
