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

#include "ctzk/pedersen.h"

#include <stdexcept>

#include "ctzk/parallel.h"

namespace ctzk {

namespace {

constexpr uint8_t kParamsVersion = 1;
constexpr uint8_t kEqProofVersion = 1;
constexpr uint8_t kRangeProofVersion = 1;

// Deterministic hash-to-group: counter-mode stream from the seed label,
// raised to the cofactor (p-1)/q. The cofactor is even, so this lands in
// the subgroup through (at least) one squaring, and nobody learns a
// discrete log relative to any other generator.
Bigint hash_to_group(const Bigint& p, const Bigint& q, const std::string& label,
                     const std::string& role, const Bigint& avoid) {
  DrbgStream stream(label + "/hash-to-group/" + role);
  Bigint cofactor = (p - 1) / q;
  unsigned p_bits = static_cast<unsigned>(bit_length(p));
  while (true) {
    Bigint u = stream.random_bits(p_bits + 64) % p;
    if (u <= 1) continue;
    Bigint cand = powm(u, cofactor, p);
    if (cand != 1 && cand != avoid) return cand;
  }
}

Bigint reduce(const Bigint& v, const Bigint& q) {
  Bigint out;
  mpz_mod(out.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return out;
}

}  // namespace

unsigned no_wraparound_floor_bits() { return kHashScalarBits + 64 + 2; }

CommitParams CommitParams::setup(const SetupBits& bits, const std::string& seed_label,
                                 unsigned challenge_bits) {
  if (bits.q_bits < no_wraparound_floor_bits()) {
    throw std::invalid_argument(
        "setup: q width below the no-wraparound floor (" +
        std::to_string(no_wraparound_floor_bits()) + " bits)");
  }
  if (bits.p_bits < bits.q_bits + 16) {
    throw std::invalid_argument("setup: p width too small for the requested q");
  }

  DrbgStream stream(seed_label + "/group");
  Bigint q;
  do {
    q = next_prime(stream.random_exact_bits(bits.q_bits));
  } while (bit_length(q) != bits.q_bits);

  unsigned cof_bits = bits.p_bits - bits.q_bits;
  Bigint p;
  while (true) {
    Bigint cof = stream.random_exact_bits(cof_bits);
    mpz_clrbit(cof.get_mpz_t(), 0);  // even cofactor
    p = q * cof + 1;
    if (bit_length(p) != bits.p_bits) continue;
    if (is_probable_prime(p)) break;
  }

  return from_group(p, q, hash_to_group(p, q, seed_label, "g", 0), seed_label,
                    std::nullopt, challenge_bits);
}

CommitParams CommitParams::from_group(const Bigint& p, const Bigint& q,
                                      const Bigint& g, const std::string& seed_label,
                                      std::optional<Bigint> h,
                                      unsigned challenge_bits) {
  CommitParams params;
  params.p = p;
  params.q = q;
  params.g = g;
  params.h = h ? *h : hash_to_group(p, q, seed_label, "h", g);
  params.label = seed_label;
  params.challenge_bits = challenge_bits;
  params.validate();
  return params;
}

void CommitParams::validate() const {
  if (!is_probable_prime(p)) throw std::invalid_argument("params: p not prime");
  if (!is_probable_prime(q)) throw std::invalid_argument("params: q not prime");
  if ((p - 1) % q != 0) throw std::invalid_argument("params: q does not divide p-1");
  if (g <= 1 || g >= p || powm(g, q, p) != 1) {
    throw std::invalid_argument("params: g not a subgroup generator");
  }
  if (h <= 1 || h >= p || powm(h, q, p) != 1) {
    throw std::invalid_argument("params: h not a subgroup generator");
  }
  if (challenge_bits == 0) throw std::invalid_argument("params: zero challenge width");
}

bool CommitParams::in_group(const Bigint& v) const {
  return v > 0 && v < p && powm(v, q, p) == 1;
}

void CommitParams::serialize(ByteWriter& w) const {
  w.put_u8(kParamsVersion);
  w.put_int(p);
  w.put_int(q);
  w.put_int(g);
  w.put_int(h);
  w.put_blob(as_bytes(label));
  w.put_u32(challenge_bits);
}

CommitParams CommitParams::deserialize(ByteReader& r) {
  if (r.get_u8() != kParamsVersion) throw ParseError("params: bad version");
  CommitParams params;
  params.p = r.get_int();
  params.q = r.get_int();
  params.g = r.get_int();
  params.h = r.get_int();
  std::vector<uint8_t> label = r.get_blob();
  params.label.assign(label.begin(), label.end());
  params.challenge_bits = r.get_u32();
  return params;
}

Commitment commit(const CommitParams& params, const Bigint& m, const Bigint& r) {
  if (m < 0 || m >= params.q) throw std::invalid_argument("commit: message out of range");
  if (r < 0 || r >= params.q) throw std::invalid_argument("commit: randomness out of range");
  return Commitment{mulm(powm(params.g, m, params.p), powm(params.h, r, params.p),
                         params.p)};
}

Commitment commit(const CommitParams& params, const Opening& o) {
  return commit(params, o.m, o.r);
}

Opening random_opening(const CommitParams& params, const Bigint& m, RandomStream& rng) {
  return Opening{m, rng.random_below(params.q)};
}

bool verify_opening(const CommitParams& params, const Commitment& c,
                    const Bigint& m, const Bigint& r) {
  if (m < 0 || m >= params.q || r < 0 || r >= params.q) return false;
  return commit(params, m, r) == c;
}

Commitment combine(const CommitParams& params, std::span<const Term> terms,
                   const Bigint& constant) {
  if (terms.empty()) throw std::invalid_argument("combine: empty term list");
  Bigint acc = 1;
  for (const Term& t : terms) {
    acc = mulm(acc, powm(t.c.value, reduce(t.coeff, params.q), params.p), params.p);
  }
  Bigint k = reduce(constant, params.q);
  if (k != 0) acc = mulm(acc, powm(params.g, k, params.p), params.p);
  return Commitment{acc};
}

Opening combine_openings(const CommitParams& params,
                         std::span<const std::pair<Opening, Bigint>> terms,
                         const Bigint& constant) {
  if (terms.empty()) throw std::invalid_argument("combine: empty term list");
  Bigint m = reduce(constant, params.q);
  Bigint r = 0;
  for (const auto& [o, coeff] : terms) {
    Bigint k = reduce(coeff, params.q);
    m = reduce(m + k * o.m, params.q);
    r = reduce(r + k * o.r, params.q);
  }
  return Opening{m, r};
}

// --- Schnorr core -----------------------------------------------------------

SchnorrSession::SchnorrSession(const CommitParams& params, const Bigint& delta,
                               RandomStream& rng)
    : params_(params), delta_(reduce(delta, params.q)) {
  nonce_ = rng.random_below(params.q);
  announcement_ = powm(params.h, nonce_, params.p);
}

Bigint SchnorrSession::respond(const Bigint& challenge) const {
  return reduce(nonce_ + challenge * delta_, params_.q);
}

bool schnorr_check(const CommitParams& params, const Bigint& y,
                   const Bigint& announcement, const Bigint& challenge,
                   const Bigint& response) {
  if (announcement <= 0 || announcement >= params.p) return false;
  if (response < 0 || response >= params.q) return false;
  Bigint lhs = powm(params.h, response, params.p);
  Bigint rhs = mulm(announcement, powm(y, reduce(challenge, params.q), params.p),
                    params.p);
  return lhs == rhs;
}

SchnorrProof schnorr_simulate(const CommitParams& params, const Bigint& y,
                              const Bigint& challenge, RandomStream& rng) {
  SchnorrProof proof;
  proof.challenge = challenge;
  proof.response = rng.random_below(params.q);
  proof.announcement = mulm(powm(params.h, proof.response, params.p),
                            powm_neg(y, reduce(challenge, params.q), params.p),
                            params.p);
  return proof;
}

// --- Equality proof ---------------------------------------------------------

namespace {

Bigint eq_statement(const CommitParams& params, const Commitment& c1,
                    const Commitment& c2) {
  return mulm(c1.value, invmod(c2.value, params.p), params.p);
}

}  // namespace

Bigint equality_challenge(const CommitParams& params, const Commitment& c1,
                          const Commitment& c2, const Bigint& announcement,
                          const Transcript& transcript) {
  Transcript t = transcript.fork("eq");
  t.absorb_int("c1", c1.value);
  t.absorb_int("c2", c2.value);
  t.absorb_int("announcement", announcement);
  return t.challenge("eq", params.challenge_bits);
}

EqProof prove_equal(const CommitParams& params, const Commitment& c1,
                    const Opening& o1, const Commitment& c2, const Opening& o2,
                    const Transcript& transcript, RandomStream& rng) {
  if (reduce(o1.m, params.q) != reduce(o2.m, params.q)) {
    throw std::invalid_argument("prove_equal: messages differ");
  }
  SchnorrSession session(params, o1.r - o2.r, rng);
  Bigint challenge =
      equality_challenge(params, c1, c2, session.announcement(), transcript);
  return EqProof{session.announcement(), challenge, session.respond(challenge)};
}

bool verify_equal(const CommitParams& params, const Commitment& c1,
                  const Commitment& c2, const EqProof& proof,
                  const Transcript& transcript) {
  if (proof.challenge !=
      equality_challenge(params, c1, c2, proof.announcement, transcript)) {
    return false;
  }
  return schnorr_check(params, eq_statement(params, c1, c2), proof.announcement,
                       proof.challenge, proof.response);
}

EqProof simulate_equal(const CommitParams& params, const Commitment& c1,
                       const Commitment& c2, const Bigint& challenge,
                       RandomStream& rng) {
  SchnorrProof sim = schnorr_simulate(params, eq_statement(params, c1, c2),
                                      challenge, rng);
  return EqProof{sim.announcement, sim.challenge, sim.response};
}

void EqProof::serialize(ByteWriter& w) const {
  w.put_u8(kEqProofVersion);
  w.put_int(announcement);
  w.put_int(challenge);
  w.put_int(response);
}

EqProof EqProof::deserialize(ByteReader& r) {
  if (r.get_u8() != kEqProofVersion) throw ParseError("eq proof: bad version");
  EqProof p;
  p.announcement = r.get_int();
  p.challenge = r.get_int();
  p.response = r.get_int();
  return p;
}

// --- Range proof ------------------------------------------------------------

namespace {

// Digit weights for the decomposition of m-1: 1, 2, ..., 2^(W-2), 2^(W-1)-1.
// Every value in [0, 2^W - 2] has a digit vector and no other value does.
std::vector<Bigint> digit_weights(unsigned width) {
  std::vector<Bigint> w(width);
  for (unsigned i = 0; i + 1 < width; ++i) w[i] = pow2(i);
  w[width - 1] = pow2(width - 1) - 1;
  return w;
}

std::vector<unsigned> decompose(Bigint v, unsigned width) {
  std::vector<unsigned> bits(width, 0);
  Bigint top = pow2(width - 1) - 1;
  if (v > top) {
    bits[width - 1] = 1;
    v -= top;
  }
  for (unsigned i = 0; i + 1 < width; ++i) {
    bits[i] = mpz_tstbit(v.get_mpz_t(), i) ? 1 : 0;
  }
  return bits;
}

Bigint bit_challenge(const CommitParams& params, const Commitment& cb,
                     const BitOrProof& partial, const Transcript& base,
                     unsigned index, const Bigint& a0, const Bigint& a1) {
  (void)partial;
  Transcript t = base.fork("bit-" + std::to_string(index));
  t.absorb_int("cb", cb.value);
  t.absorb_int("a0", a0);
  t.absorb_int("a1", a1);
  return t.challenge("bit", params.challenge_bits);
}

Transcript range_base_transcript(const CommitParams& params, const Commitment& c,
                                 unsigned width,
                                 const std::vector<Commitment>& bit_commitments,
                                 const Transcript& transcript) {
  Transcript t = transcript.fork("range");
  t.absorb_int("target", c.value);
  t.absorb_u64("width", width);
  for (const Commitment& cb : bit_commitments) t.absorb_int("bit-commitment", cb.value);
  (void)params;
  return t;
}

}  // namespace

bool check_bit_equations(const CommitParams& params, const Commitment& cb,
                         const BitOrProof& proof, const Bigint& challenge) {
  Bigint mask = pow2(params.challenge_bits);
  if (proof.c0 < 0 || proof.c0 >= mask) return false;
  Bigint c1 = reduce(challenge - proof.c0, mask);
  if (proof.z0 < 0 || proof.z0 >= params.q || proof.z1 < 0 || proof.z1 >= params.q) {
    return false;
  }
  if (proof.a0 <= 0 || proof.a0 >= params.p || proof.a1 <= 0 || proof.a1 >= params.p) {
    return false;
  }
  // Branch 0: cb commits to 0, i.e. cb = h^r.
  Bigint lhs0 = powm(params.h, proof.z0, params.p);
  Bigint rhs0 = mulm(proof.a0, powm(cb.value, reduce(proof.c0, params.q), params.p),
                     params.p);
  if (lhs0 != rhs0) return false;
  // Branch 1: cb/g commits to 0.
  Bigint y1 = mulm(cb.value, invmod(params.g, params.p), params.p);
  Bigint lhs1 = powm(params.h, proof.z1, params.p);
  Bigint rhs1 = mulm(proof.a1, powm(y1, reduce(c1, params.q), params.p), params.p);
  return lhs1 == rhs1;
}

BitOrProof prove_bit(const CommitParams& params, const Commitment& cb, unsigned bit,
                     const Bigint& r, const Transcript& transcript, unsigned index,
                     RandomStream& rng) {
  if (bit > 1) throw std::invalid_argument("prove_bit: not a bit");
  Bigint mask = pow2(params.challenge_bits);
  BitOrProof proof;
  Bigint nonce = rng.random_below(params.q);
  Bigint sim_challenge = rng.random_bits(params.challenge_bits);

  if (bit == 0) {
    // Real branch 0, simulated branch 1.
    proof.a0 = powm(params.h, nonce, params.p);
    Bigint y1 = mulm(cb.value, invmod(params.g, params.p), params.p);
    proof.z1 = rng.random_below(params.q);
    proof.a1 = mulm(powm(params.h, proof.z1, params.p),
                    powm_neg(y1, reduce(sim_challenge, params.q), params.p), params.p);
    Bigint c = bit_challenge(params, cb, proof, transcript, index, proof.a0, proof.a1);
    proof.c0 = reduce(c - sim_challenge, mask);
    proof.z0 = reduce(nonce + reduce(proof.c0, params.q) * r, params.q);
  } else {
    // Simulated branch 0, real branch 1 (cb/g = h^r).
    proof.c0 = sim_challenge;
    proof.z0 = rng.random_below(params.q);
    proof.a0 = mulm(powm(params.h, proof.z0, params.p),
                    powm_neg(cb.value, reduce(proof.c0, params.q), params.p), params.p);
    proof.a1 = powm(params.h, nonce, params.p);
    Bigint c = bit_challenge(params, cb, proof, transcript, index, proof.a0, proof.a1);
    Bigint c1 = reduce(c - proof.c0, mask);
    proof.z1 = reduce(nonce + reduce(c1, params.q) * r, params.q);
  }
  return proof;
}

bool verify_bit(const CommitParams& params, const Commitment& cb,
                const BitOrProof& proof, const Transcript& transcript,
                unsigned index) {
  Bigint c = bit_challenge(params, cb, proof, transcript, index, proof.a0, proof.a1);
  return check_bit_equations(params, cb, proof, c);
}

BitOrProof simulate_bit(const CommitParams& params, const Commitment& cb,
                        const Bigint& challenge, RandomStream& rng) {
  Bigint mask = pow2(params.challenge_bits);
  BitOrProof proof;
  proof.c0 = rng.random_bits(params.challenge_bits);
  Bigint c1 = reduce(challenge - proof.c0, mask);
  proof.z0 = rng.random_below(params.q);
  proof.z1 = rng.random_below(params.q);
  proof.a0 = mulm(powm(params.h, proof.z0, params.p),
                  powm_neg(cb.value, reduce(proof.c0, params.q), params.p), params.p);
  Bigint y1 = mulm(cb.value, invmod(params.g, params.p), params.p);
  proof.a1 = mulm(powm(params.h, proof.z1, params.p),
                  powm_neg(y1, reduce(c1, params.q), params.p), params.p);
  return proof;
}

RangeProof prove_nonneg_range(const CommitParams& params, const Commitment& c,
                              const Opening& opening, unsigned width,
                              const Transcript& transcript, RandomStream& rng) {
  if (width < 2 || width > 512) throw std::invalid_argument("range: unsupported width");
  if (opening.m < 1 || opening.m >= pow2(width)) {
    throw std::invalid_argument("range: committed value outside [1, 2^W)");
  }

  std::vector<Bigint> weights = digit_weights(width);
  std::vector<unsigned> digits = decompose(opening.m - 1, width);

  RangeProof proof;
  proof.width = width;
  std::vector<Bigint> bit_randomness(width);
  proof.bit_commitments.resize(width);
  for (unsigned i = 0; i < width; ++i) {
    bit_randomness[i] = rng.random_below(params.q);
    proof.bit_commitments[i] = commit(params, digits[i], bit_randomness[i]);
  }

  Transcript base = range_base_transcript(params, c, width, proof.bit_commitments,
                                          transcript);

  proof.bit_proofs.resize(width);
  if (parallel::max_threads() > 1) {
    parallel::for_range(width, [&](int64_t i) {
      SystemRandom local_rng;
      proof.bit_proofs[i] = prove_bit(params, proof.bit_commitments[i], digits[i],
                                      bit_randomness[i], base,
                                      static_cast<unsigned>(i), local_rng);
    });
  } else {
    for (unsigned i = 0; i < width; ++i) {
      proof.bit_proofs[i] = prove_bit(params, proof.bit_commitments[i], digits[i],
                                      bit_randomness[i], base, i, rng);
    }
  }

  // Consistency: C * g^-1 * prod(C_i^-w_i) = h^delta.
  Bigint delta = opening.r;
  for (unsigned i = 0; i < width; ++i) {
    delta = reduce(delta - weights[i] * bit_randomness[i], params.q);
  }
  Bigint y = mulm(c.value, invmod(params.g, params.p), params.p);
  for (unsigned i = 0; i < width; ++i) {
    y = mulm(y,
             powm_neg(proof.bit_commitments[i].value, reduce(weights[i], params.q),
                      params.p),
             params.p);
  }
  SchnorrSession session(params, delta, rng);
  Transcript tc = base.fork("consistency");
  tc.absorb_int("statement", y);
  tc.absorb_int("announcement", session.announcement());
  Bigint challenge = tc.challenge("consistency", params.challenge_bits);
  proof.consistency =
      SchnorrProof{session.announcement(), challenge, session.respond(challenge)};
  return proof;
}

bool verify_nonneg_range(const CommitParams& params, const Commitment& c,
                         unsigned width, const RangeProof& proof,
                         const Transcript& transcript) {
  if (proof.width != width || width < 2) return false;
  if (proof.bit_commitments.size() != width || proof.bit_proofs.size() != width) {
    return false;
  }
  // Bit commitments are exponent bases below; pin them to the subgroup.
  if (!parallel::all_of_range(width, [&](int64_t i) {
        return params.in_group(proof.bit_commitments[i].value);
      })) {
    return false;
  }

  Transcript base = range_base_transcript(params, c, width, proof.bit_commitments,
                                          transcript);
  if (!parallel::all_of_range(width, [&](int64_t i) {
        return verify_bit(params, proof.bit_commitments[i], proof.bit_proofs[i], base,
                          static_cast<unsigned>(i));
      })) {
    return false;
  }

  std::vector<Bigint> weights = digit_weights(width);
  Bigint y = mulm(c.value, invmod(params.g, params.p), params.p);
  for (unsigned i = 0; i < width; ++i) {
    y = mulm(y,
             powm_neg(proof.bit_commitments[i].value, reduce(weights[i], params.q),
                      params.p),
             params.p);
  }
  Transcript tc = base.fork("consistency");
  tc.absorb_int("statement", y);
  tc.absorb_int("announcement", proof.consistency.announcement);
  Bigint challenge = tc.challenge("consistency", params.challenge_bits);
  if (challenge != proof.consistency.challenge) return false;
  return schnorr_check(params, y, proof.consistency.announcement,
                       proof.consistency.challenge, proof.consistency.response);
}

void RangeProof::serialize(ByteWriter& w) const {
  w.put_u8(kRangeProofVersion);
  w.put_u16(static_cast<uint16_t>(width));
  for (unsigned i = 0; i < width; ++i) {
    w.put_int(bit_commitments[i].value);
    w.put_int(bit_proofs[i].a0);
    w.put_int(bit_proofs[i].a1);
    w.put_int(bit_proofs[i].c0);
    w.put_int(bit_proofs[i].z0);
    w.put_int(bit_proofs[i].z1);
  }
  w.put_int(consistency.announcement);
  w.put_int(consistency.challenge);
  w.put_int(consistency.response);
}

RangeProof RangeProof::deserialize(ByteReader& r) {
  if (r.get_u8() != kRangeProofVersion) throw ParseError("range proof: bad version");
  RangeProof proof;
  proof.width = r.get_u16();
  if (proof.width > 512) throw ParseError("range proof: width too large");
  proof.bit_commitments.resize(proof.width);
  proof.bit_proofs.resize(proof.width);
  for (unsigned i = 0; i < proof.width; ++i) {
    proof.bit_commitments[i].value = r.get_int();
    proof.bit_proofs[i].a0 = r.get_int();
    proof.bit_proofs[i].a1 = r.get_int();
    proof.bit_proofs[i].c0 = r.get_int();
    proof.bit_proofs[i].z0 = r.get_int();
    proof.bit_proofs[i].z1 = r.get_int();
  }
  proof.consistency.announcement = r.get_int();
  proof.consistency.challenge = r.get_int();
  proof.consistency.response = r.get_int();
  return proof;
}

void serialize_commitment(ByteWriter& w, const Commitment& c) { w.put_int(c.value); }

Commitment deserialize_commitment(ByteReader& r) { return Commitment{r.get_int()}; }

}  // namespace ctzk
