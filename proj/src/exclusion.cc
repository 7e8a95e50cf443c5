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

#include "ctzk/exclusion.h"

#include <chrono>
#include <stdexcept>

namespace ctzk {

namespace {

constexpr uint8_t kProofVersion = 1;
constexpr uint8_t kSectionCommitments = 1;
constexpr uint8_t kSectionPoKs = 2;
constexpr uint8_t kSectionEq = 3;
constexpr uint8_t kSectionRanges = 4;
constexpr uint8_t kSectionTag = 5;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from) {
  return std::chrono::duration<double, std::milli>(Clock::now() - from).count();
}

Bigint reduce(const Bigint& v, const Bigint& q) {
  Bigint out;
  mpz_mod(out.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return out;
}

// Context transcript: group label, log keys, variant. Sub-proof challenges
// are derived from forks of this and each absorbs its own statement, so
// every commitment is bound by the sub-proof that speaks about it.
Transcript master_transcript(const CommitParams& params, const LogPublicKeys& pub,
                             const ExclusionProof& proof) {
  Transcript t("ctzk/exclusion/v1");
  t.absorb("params-label", as_bytes(params.label));
  t.absorb("log-keys", pub.digest());
  t.absorb_u64("mode", static_cast<uint64_t>(proof.mode));
  t.absorb_u64("actionable", proof.actionable ? 1 : 0);
  return t;
}

struct DerivedCommitments {
  Commitment c_ihx, c_thx, c_thy, c_ihz, c_thz;
  Commitment c_ix1, c_p1, c_p2;
};

// Step-2 and step-4 commitments the verifier recomputes. The mode decides
// the index/timestamp scaling: plain sums or *2^160 concatenations.
DerivedCommitments derive_commitments(const CommitParams& params,
                                      const ExclusionProof& proof,
                                      const Commitment& c_hy_eff) {
  Bigint shift = proof.mode == LogMode::kPiPrime ? pow2(kHashScalarBits) : Bigint(1);
  DerivedCommitments d;
  auto pair_sum = [&](const Commitment& scaled, const Commitment& hash) {
    std::array<Term, 2> terms{Term{scaled, shift}, Term{hash, 1}};
    return combine(params, terms);
  };
  d.c_ihx = pair_sum(proof.c_ix, proof.c_hx);
  d.c_thx = pair_sum(proof.c_tx, proof.c_hx);
  d.c_thy = pair_sum(proof.c_ty, c_hy_eff);
  d.c_ihz = pair_sum(proof.c_iz, proof.c_hz);
  d.c_thz = pair_sum(proof.c_tz, proof.c_hz);
  {
    std::array<Term, 2> terms{Term{proof.c_ix, 1}, Term{proof.c_one, 1}};
    d.c_ix1 = combine(params, terms);
  }
  {
    std::array<Term, 2> terms{Term{proof.c_tz, 1}, Term{proof.c_ty, -1}};
    d.c_p1 = combine(params, terms);
  }
  {
    std::array<Term, 2> terms{Term{proof.c_ty, 1}, Term{proof.c_tx, -1}};
    d.c_p2 = combine(params, terms);
  }
  return d;
}

struct PokPlan {
  const CLPublicKey* pk;
  Bigint message;
  const CLSignature* sig;
  Commitment statement;
  Bigint randomness;
};

}  // namespace

std::string reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::kOk: return "ok";
    case RejectReason::kMalformed: return "malformed";
    case RejectReason::kOpening: return "opening";
    case RejectReason::kDerive: return "derive";
    case RejectReason::kPok1: return "pok-1";
    case RejectReason::kPok2: return "pok-2";
    case RejectReason::kPok3: return "pok-3";
    case RejectReason::kPok4: return "pok-4";
    case RejectReason::kPok5: return "pok-5";
    case RejectReason::kPok6: return "pok-6";
    case RejectReason::kPok7: return "pok-7";
    case RejectReason::kEq: return "eq";
    case RejectReason::kRange1: return "range-1";
    case RejectReason::kRange2: return "range-2";
  }
  return "unknown";
}

ExclusionProof build_from_claims(const CommitParams& params, const LogPublicKeys& pub,
                                 const ProofClaims& claims, RandomStream& rng,
                                 bool actionable) {
  ExclusionProof proof;
  proof.mode = pub.mode;
  proof.actionable = actionable;

  auto open = [&](const Bigint& v) {
    return Opening{reduce(v, params.q), rng.random_below(params.q)};
  };
  Opening o_tx = open(claims.t_x), o_hx = open(claims.h_x), o_ix = open(claims.i_x);
  Opening o_ty = open(claims.t_y), o_hy = open(claims.h_y);
  Opening o_tz = open(claims.t_z), o_hz = open(claims.h_z), o_iz = open(claims.i_z);
  if (actionable) {
    // Reveal H(y): randomness pinned to zero, verifier recomputes g^H(y).
    o_hy.r = 0;
    proof.revealed_hy = reduce(claims.h_y, params.q);
  }
  Opening o_one{1, rng.random_below(params.q)};

  proof.c_tx = commit(params, o_tx);
  proof.c_hx = commit(params, o_hx);
  proof.c_ix = commit(params, o_ix);
  proof.c_hy = commit(params, o_hy);
  proof.c_ty = commit(params, o_ty);
  proof.c_tz = commit(params, o_tz);
  proof.c_hz = commit(params, o_hz);
  proof.c_iz = commit(params, o_iz);
  proof.c_one = commit(params, o_one);
  proof.r_one = o_one.r;

  Transcript master = master_transcript(params, pub, proof);
  DerivedCommitments derived = derive_commitments(params, proof, proof.c_hy);

  Bigint shift = pub.mode == LogMode::kPiPrime ? pow2(kHashScalarBits) : Bigint(1);
  auto sum_open = [&](const Opening& scaled, const Opening& hash) {
    std::array<std::pair<Opening, Bigint>, 2> terms{std::pair{scaled, shift},
                                                    std::pair{hash, Bigint(1)}};
    return combine_openings(params, terms);
  };
  Opening o_ihx = sum_open(o_ix, o_hx);
  Opening o_thx = sum_open(o_tx, o_hx);
  Opening o_thy = sum_open(o_ty, o_hy);
  Opening o_ihz = sum_open(o_iz, o_hz);
  Opening o_thz = sum_open(o_tz, o_hz);

  const std::array<PokPlan, 7> plan{
      PokPlan{&pub.ki, o_ihx.m, &claims.sig_ihx, derived.c_ihx, o_ihx.r},
      PokPlan{&pub.kh, o_hx.m, &claims.sig_hx, proof.c_hx, o_hx.r},
      PokPlan{&pub.kt, o_thx.m, &claims.sig_thx, derived.c_thx, o_thx.r},
      PokPlan{&pub.kt, o_thy.m, &claims.sig_thy, derived.c_thy, o_thy.r},
      PokPlan{&pub.ki, o_ihz.m, &claims.sig_ihz, derived.c_ihz, o_ihz.r},
      PokPlan{&pub.kh, o_hz.m, &claims.sig_hz, proof.c_hz, o_hz.r},
      PokPlan{&pub.kt, o_thz.m, &claims.sig_thz, derived.c_thz, o_thz.r},
  };
  for (size_t k = 0; k < plan.size(); ++k) {
    // Sessions are built directly: an invalid claimed signature still yields
    // a transcript, it just cannot verify.
    CLPoKSession session(*plan[k].pk, plan[k].message, *plan[k].sig, params,
                         plan[k].randomness, rng);
    Bigint ch = sig_pok_challenge(*plan[k].pk, params, plan[k].statement,
                                  session.v_blinded(), session.t_rsa(),
                                  session.t_ped(),
                                  master.fork("pok-" + std::to_string(k + 1)));
    proof.poks[k] = session.respond(ch);
  }

  // Adjacency: C_{I_x+1} vs C_{I_z}. A dishonest claim (differing messages)
  // produces a proof over the randomness difference alone, which cannot
  // satisfy the verification equation.
  std::array<std::pair<Opening, Bigint>, 2> ix1_terms{std::pair{o_ix, Bigint(1)},
                                                      std::pair{o_one, Bigint(1)}};
  Opening o_ix1 = combine_openings(params, ix1_terms);
  {
    SchnorrSession session(params, o_ix1.r - o_iz.r, rng);
    Bigint ch = equality_challenge(params, derived.c_ix1, proof.c_iz,
                                   session.announcement(),
                                   master.fork("eq-adjacency"));
    proof.adjacency = EqProof{session.announcement(), ch, session.respond(ch)};
  }

  // Range proofs on p1 = T_z - T_y and p2 = T_y - T_x. Out-of-range claimed
  // values get a truncated decomposition whose consistency check fails.
  auto forced_range = [&](const Commitment& c, Opening o, const char* section) {
    Bigint v = reduce(o.m - 1, params.q);
    Bigint clamped = v % pow2(kTimestampRangeBits);
    Bigint lifted = clamped + 1;
    if (lifted == reduce(o.m, params.q) && lifted >= 1 &&
        lifted < pow2(kTimestampRangeBits)) {
      return prove_nonneg_range(params, c, o, kTimestampRangeBits,
                                master.fork(section), rng);
    }
    // Build over a wrong-but-in-range value with the claimed randomness.
    Opening fake{(clamped % (pow2(kTimestampRangeBits) - 1)) + 1, o.r};
    Commitment c_fake = commit(params, fake);
    RangeProof rp = prove_nonneg_range(params, c_fake, fake, kTimestampRangeBits,
                                       master.fork(section), rng);
    (void)c;
    return rp;
  };
  std::array<std::pair<Opening, Bigint>, 2> p1_terms{std::pair{o_tz, Bigint(1)},
                                                     std::pair{o_ty, Bigint(-1)}};
  std::array<std::pair<Opening, Bigint>, 2> p2_terms{std::pair{o_ty, Bigint(1)},
                                                     std::pair{o_tx, Bigint(-1)}};
  proof.range_p1 = forced_range(derived.c_p1, combine_openings(params, p1_terms),
                                "range-p1");
  proof.range_p2 = forced_range(derived.c_p2, combine_openings(params, p2_terms),
                                "range-p2");

  proof.tag = master.digest();
  return proof;
}

ExclusionProof build_exclusion_proof(const CommitParams& params,
                                     const LogPublicKeys& pub,
                                     const ProverWitness& witness, RandomStream& rng,
                                     bool actionable) {
  const LogEntry& x = witness.x;
  const LogEntry& z = witness.z;
  if (z.index != x.index + 1) {
    throw std::invalid_argument("exclusion: entries are not adjacent");
  }
  if (!(x.timestamp < witness.y.timestamp && witness.y.timestamp < z.timestamp)) {
    throw std::invalid_argument("exclusion: SCT timestamp not strictly interior");
  }
  if (!verify_entry_signatures(pub, x, witness.x_sigs) ||
      !verify_entry_signatures(pub, z, witness.z_sigs)) {
    throw std::invalid_argument("exclusion: entry signatures invalid");
  }
  if (!verify_sct(pub, witness.y)) {
    throw std::invalid_argument("exclusion: SCT invalid");
  }
  if (!verify_tree_head(pub, witness.sth)) {
    throw std::invalid_argument("exclusion: tree head signature invalid");
  }
  if (witness.sth.timestamp < witness.y.timestamp + witness.mmd_ms) {
    throw std::invalid_argument("exclusion: MMD has not elapsed for this SCT");
  }

  ProofClaims claims;
  claims.t_x = x.timestamp;
  claims.i_x = x.index;
  claims.h_x = hash_entry(entry_tuple_bytes(x));
  claims.t_y = witness.y.timestamp;
  claims.h_y = hash_entry(sct_tuple_bytes(witness.y.data, witness.y.timestamp));
  claims.t_z = z.timestamp;
  claims.i_z = z.index;
  claims.h_z = hash_entry(entry_tuple_bytes(z));
  claims.sig_ihx = witness.x_sigs.sig_i;
  claims.sig_hx = witness.x_sigs.sig_h;
  claims.sig_thx = witness.x_sigs.sig_t;
  claims.sig_thy = witness.y.sig_t_ext;
  claims.sig_ihz = witness.z_sigs.sig_i;
  claims.sig_hz = witness.z_sigs.sig_h;
  claims.sig_thz = witness.z_sigs.sig_t;
  return build_from_claims(params, pub, claims, rng, actionable);
}

VerifyOutcome verify_exclusion_proof(const CommitParams& params,
                                     const LogPublicKeys& pub,
                                     const ExclusionProof& proof,
                                     VerifyTimings* timings) {
  VerifyOutcome out;
  VerifyTimings local;
  Clock::time_point t_total = Clock::now();

  auto fail = [&](RejectReason reason) {
    out.accepted = false;
    out.reason = reason;
    local.total_ms = elapsed_ms(t_total);
    if (timings) *timings = local;
    return out;
  };

  // Structural checks.
  if (proof.mode != pub.mode) return fail(RejectReason::kMalformed);
  if (proof.range_p1.width != kTimestampRangeBits ||
      proof.range_p2.width != kTimestampRangeBits) {
    return fail(RejectReason::kMalformed);
  }
  if (proof.actionable &&
      (proof.revealed_hy < 0 || proof.revealed_hy >= pow2(kHashScalarBits))) {
    return fail(RejectReason::kMalformed);
  }
  Transcript master = master_transcript(params, pub, proof);
  if (master.digest() != proof.tag) return fail(RejectReason::kMalformed);

  // Step 0: revealed opening of C_1, and for the actionable form the
  // verifier computes g^H(y) itself from the revealed hash.
  Clock::time_point t0 = Clock::now();
  bool opening_ok = verify_opening(params, proof.c_one, 1, proof.r_one);
  Commitment c_hy_eff = proof.c_hy;
  if (proof.actionable) {
    c_hy_eff = commit(params, proof.revealed_hy, Bigint(0));
  }
  local.opening_ms = elapsed_ms(t0);
  if (!opening_ok) return fail(RejectReason::kOpening);

  // Step 2: transported commitments must live in the subgroup, then the
  // derived commitments are recomputed (never transported).
  t0 = Clock::now();
  std::vector<const Commitment*> transported{&proof.c_tx, &proof.c_hx, &proof.c_ix,
                                             &proof.c_ty, &proof.c_tz, &proof.c_hz,
                                             &proof.c_iz, &proof.c_one};
  if (!proof.actionable) transported.push_back(&proof.c_hy);
  for (const Commitment* c : transported) {
    if (!params.in_group(c->value)) {
      local.derive_ms = elapsed_ms(t0);
      return fail(RejectReason::kDerive);
    }
  }
  DerivedCommitments derived = derive_commitments(params, proof, c_hy_eff);
  local.derive_ms = elapsed_ms(t0);

  // Step 3: the seven signature proofs, early abort on the first failure.
  t0 = Clock::now();
  const std::array<std::pair<const CLPublicKey*, const Commitment*>, 7> stmts{
      std::pair{&pub.ki, &derived.c_ihx}, std::pair{&pub.kh, &proof.c_hx},
      std::pair{&pub.kt, &derived.c_thx}, std::pair{&pub.kt, &derived.c_thy},
      std::pair{&pub.ki, &derived.c_ihz}, std::pair{&pub.kh, &proof.c_hz},
      std::pair{&pub.kt, &derived.c_thz}};
  for (size_t k = 0; k < stmts.size(); ++k) {
    if (!verify_sig_knowledge(*stmts[k].first, params, *stmts[k].second,
                              proof.poks[k], master.fork("pok-" + std::to_string(k + 1)))) {
      local.poks_ms = elapsed_ms(t0);
      return fail(static_cast<RejectReason>(static_cast<int>(RejectReason::kPok1) +
                                            static_cast<int>(k)));
    }
  }
  local.poks_ms = elapsed_ms(t0);

  // Step 4 happened inside derive_commitments; nothing can fail here, but
  // the time is accounted separately for the abort measurements.
  t0 = Clock::now();
  local.arithmetic_ms = elapsed_ms(t0);

  // Step 5: adjacency equality, then both range proofs.
  t0 = Clock::now();
  bool eq_ok = verify_equal(params, derived.c_ix1, proof.c_iz, proof.adjacency,
                            master.fork("eq-adjacency"));
  local.eq_ms = elapsed_ms(t0);
  if (!eq_ok) return fail(RejectReason::kEq);

  t0 = Clock::now();
  if (!verify_nonneg_range(params, derived.c_p1, kTimestampRangeBits, proof.range_p1,
                           master.fork("range-p1"))) {
    local.ranges_ms = elapsed_ms(t0);
    return fail(RejectReason::kRange1);
  }
  if (!verify_nonneg_range(params, derived.c_p2, kTimestampRangeBits, proof.range_p2,
                           master.fork("range-p2"))) {
    local.ranges_ms = elapsed_ms(t0);
    return fail(RejectReason::kRange2);
  }
  local.ranges_ms = elapsed_ms(t0);

  out.accepted = true;
  out.reason = RejectReason::kOk;
  if (proof.actionable) out.revealed_hy = proof.revealed_hy;
  local.total_ms = elapsed_ms(t_total);
  if (timings) *timings = local;
  return out;
}

bool match_sct_hash(const Bigint& h_revealed, const SctBundle& sct) {
  return hash_entry(sct_tuple_bytes(sct.data, sct.timestamp)) == h_revealed;
}

// --- Serialization ------------------------------------------------------------

void ExclusionProof::serialize(ByteWriter& w) const {
  w.put_u8(kProofVersion);
  w.put_u8(static_cast<uint8_t>(mode));
  w.put_u8(actionable ? 1 : 0);

  w.put_u8(kSectionCommitments);
  w.put_int(c_tx.value);
  w.put_int(c_hx.value);
  w.put_int(c_ix.value);
  if (actionable) {
    w.put_int(revealed_hy);
  } else {
    w.put_int(c_hy.value);
  }
  w.put_int(c_ty.value);
  w.put_int(c_tz.value);
  w.put_int(c_hz.value);
  w.put_int(c_iz.value);
  w.put_int(c_one.value);
  w.put_int(r_one);

  w.put_u8(kSectionPoKs);
  for (const SigPoK& pok : poks) pok.serialize(w);

  w.put_u8(kSectionEq);
  adjacency.serialize(w);

  w.put_u8(kSectionRanges);
  range_p1.serialize(w);
  range_p2.serialize(w);

  w.put_u8(kSectionTag);
  w.put_bytes(tag);
}

ExclusionProof ExclusionProof::deserialize(ByteReader& r) {
  if (r.get_u8() != kProofVersion) throw ParseError("proof: bad version");
  ExclusionProof proof;
  uint8_t mode = r.get_u8();
  if (mode > 1) throw ParseError("proof: bad mode");
  proof.mode = static_cast<LogMode>(mode);
  proof.actionable = r.get_u8() != 0;

  if (r.get_u8() != kSectionCommitments) throw ParseError("proof: missing commitments");
  proof.c_tx.value = r.get_int();
  proof.c_hx.value = r.get_int();
  proof.c_ix.value = r.get_int();
  if (proof.actionable) {
    proof.revealed_hy = r.get_int();
  } else {
    proof.c_hy.value = r.get_int();
  }
  proof.c_ty.value = r.get_int();
  proof.c_tz.value = r.get_int();
  proof.c_hz.value = r.get_int();
  proof.c_iz.value = r.get_int();
  proof.c_one.value = r.get_int();
  proof.r_one = r.get_int();

  if (r.get_u8() != kSectionPoKs) throw ParseError("proof: missing poks");
  for (SigPoK& pok : proof.poks) pok = SigPoK::deserialize(r);

  if (r.get_u8() != kSectionEq) throw ParseError("proof: missing eq");
  proof.adjacency = EqProof::deserialize(r);

  if (r.get_u8() != kSectionRanges) throw ParseError("proof: missing ranges");
  proof.range_p1 = RangeProof::deserialize(r);
  proof.range_p2 = RangeProof::deserialize(r);

  if (r.get_u8() != kSectionTag) throw ParseError("proof: missing tag");
  std::vector<uint8_t> tag = r.get_bytes(32);
  std::copy(tag.begin(), tag.end(), proof.tag.begin());
  return proof;
}

std::vector<uint8_t> ExclusionProof::bytes() const {
  ByteWriter w;
  serialize(w);
  return w.take();
}

ProofSectionSizes measure_proof_sections(const ExclusionProof& proof) {
  ProofSectionSizes sizes;
  sizes.header = 3;
  {
    ByteWriter w;
    w.put_int(proof.c_tx.value);
    w.put_int(proof.c_hx.value);
    w.put_int(proof.c_ix.value);
    if (proof.actionable) {
      w.put_int(proof.revealed_hy);
    } else {
      w.put_int(proof.c_hy.value);
    }
    w.put_int(proof.c_ty.value);
    w.put_int(proof.c_tz.value);
    w.put_int(proof.c_hz.value);
    w.put_int(proof.c_iz.value);
    w.put_int(proof.c_one.value);
    w.put_int(proof.r_one);
    sizes.commitments = w.size() + 1;
  }
  {
    ByteWriter w;
    for (const SigPoK& pok : proof.poks) pok.serialize(w);
    sizes.sig_poks = w.size() + 1;
  }
  {
    ByteWriter w;
    proof.adjacency.serialize(w);
    sizes.equality = w.size() + 1;
  }
  {
    ByteWriter w;
    proof.range_p1.serialize(w);
    proof.range_p2.serialize(w);
    sizes.ranges = w.size() + 1;
  }
  sizes.tag = 33;
  return sizes;
}

}  // namespace ctzk
