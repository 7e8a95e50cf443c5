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
// Pedersen commitments over a prime-order subgroup of Z_p*, with the
// zero-knowledge toolkit built on top of them: homomorphic combination,
// equality proofs, and bounded positivity range proofs. Every proof exists
// in two transports: an interactive sigma-protocol core (announce /
// challenge / respond, with an honest-verifier simulator) and the
// non-interactive transcript-hashed form used on the wire.

#ifndef CTZK_PEDERSEN_H_
#define CTZK_PEDERSEN_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctzk/bignum.h"
#include "ctzk/encoding.h"
#include "ctzk/hashing.h"
#include "ctzk/random.h"

namespace ctzk {

struct SetupBits {
  unsigned p_bits;
  unsigned q_bits;
};

// Group parameters. g and h generate the order-q subgroup; h is derived
// from the seed label by hash-to-group so no party knows log_g h.
struct CommitParams {
  Bigint p;  // modulus, prime
  Bigint q;  // subgroup order, prime, q | p-1
  Bigint g;
  Bigint h;
  std::string label;        // domain-separation label for transcripts
  unsigned challenge_bits;  // Fiat-Shamir challenge width

  // Deterministic parameter generation from a seed label. Rejects q widths
  // below the no-wraparound floor (hash scalar width + 64 + 2): sums like
  // T + H(x) must never reduce mod q.
  static CommitParams setup(const SetupBits& bits, const std::string& seed_label,
                            unsigned challenge_bits = 256);

  // Builds params around an explicitly supplied group (no floor check; used
  // for small test groups). h is derived from the label unless given.
  static CommitParams from_group(const Bigint& p, const Bigint& q, const Bigint& g,
                                 const std::string& seed_label,
                                 std::optional<Bigint> h = std::nullopt,
                                 unsigned challenge_bits = 256);

  // Throws std::invalid_argument if any invariant fails.
  void validate() const;

  // Subgroup membership: 0 < v < p and v^q = 1.
  bool in_group(const Bigint& v) const;

  unsigned q_bits() const { return static_cast<unsigned>(bit_length(q)); }

  void serialize(ByteWriter& w) const;
  static CommitParams deserialize(ByteReader& r);
};

// Minimum q width accepted by setup(): hash scalar + 64-bit field + 2.
unsigned no_wraparound_floor_bits();

struct Commitment {
  Bigint value;
  bool operator==(const Commitment&) const = default;
};

struct Opening {
  Bigint m;
  Bigint r;
};

Commitment commit(const CommitParams& params, const Bigint& m, const Bigint& r);
Commitment commit(const CommitParams& params, const Opening& o);
Opening random_opening(const CommitParams& params, const Bigint& m, RandomStream& rng);

bool verify_opening(const CommitParams& params, const Commitment& c,
                    const Bigint& m, const Bigint& r);

// One term of a homomorphic combination: commitment and public coefficient.
struct Term {
  Commitment c;
  Bigint coeff;
};

// prod C_i^{k_i} * g^{constant}. Opens to (sum k_i m_i + const, sum k_i r_i).
Commitment combine(const CommitParams& params, std::span<const Term> terms,
                   const Bigint& constant = 0);
Opening combine_openings(const CommitParams& params,
                         std::span<const std::pair<Opening, Bigint>> terms,
                         const Bigint& constant = 0);

// --- Schnorr proof of knowledge of delta with y = h^delta ------------------
//
// The shared primitive behind equality proofs and the range-proof
// consistency check.

struct SchnorrProof {
  Bigint announcement;
  Bigint challenge;
  Bigint response;
};

// Interactive core.
class SchnorrSession {
 public:
  SchnorrSession(const CommitParams& params, const Bigint& delta, RandomStream& rng);
  const Bigint& announcement() const { return announcement_; }
  Bigint respond(const Bigint& challenge) const;

 private:
  const CommitParams& params_;
  Bigint delta_;
  Bigint nonce_;
  Bigint announcement_;
};

bool schnorr_check(const CommitParams& params, const Bigint& y,
                   const Bigint& announcement, const Bigint& challenge,
                   const Bigint& response);
// Honest-verifier simulator: transcript for a given challenge, no witness.
SchnorrProof schnorr_simulate(const CommitParams& params, const Bigint& y,
                              const Bigint& challenge, RandomStream& rng);

// --- Equality of committed values ------------------------------------------

// Proves C1 and C2 commit to the same message. The challenge binds both
// commitments through the transcript.
struct EqProof {
  Bigint announcement;
  Bigint challenge;
  Bigint response;

  void serialize(ByteWriter& w) const;
  static EqProof deserialize(ByteReader& r);
};

// Fiat-Shamir challenge for the equality statement (c1, c2, announcement).
Bigint equality_challenge(const CommitParams& params, const Commitment& c1,
                          const Commitment& c2, const Bigint& announcement,
                          const Transcript& transcript);

// Throws std::invalid_argument when the openings disagree on the message.
EqProof prove_equal(const CommitParams& params, const Commitment& c1,
                    const Opening& o1, const Commitment& c2, const Opening& o2,
                    const Transcript& transcript, RandomStream& rng);
bool verify_equal(const CommitParams& params, const Commitment& c1,
                  const Commitment& c2, const EqProof& proof,
                  const Transcript& transcript);
EqProof simulate_equal(const CommitParams& params, const Commitment& c1,
                       const Commitment& c2, const Bigint& challenge,
                       RandomStream& rng);

// --- Range proof: committed value in [1, 2^W) ------------------------------
//
// Bit-decomposition with one OR-proof per digit. The proof decomposes m-1
// over digit weights (1, 2, ..., 2^(W-2), 2^(W-1)-1); that digit set covers
// exactly [0, 2^W - 2], so the accepted value set is exactly [1, 2^W).

struct BitOrProof {
  Bigint a0, a1;  // announcements for the zero / one branch
  Bigint c0;      // challenge share of the zero branch; c1 = c - c0
  Bigint z0, z1;
};

struct RangeProof {
  unsigned width = 0;
  std::vector<Commitment> bit_commitments;
  std::vector<BitOrProof> bit_proofs;
  SchnorrProof consistency;

  void serialize(ByteWriter& w) const;
  static RangeProof deserialize(ByteReader& r);
};

inline constexpr unsigned kTimestampRangeBits = 64;

// Throws std::invalid_argument unless 1 <= opening.m < 2^width.
RangeProof prove_nonneg_range(const CommitParams& params, const Commitment& c,
                              const Opening& opening, unsigned width,
                              const Transcript& transcript, RandomStream& rng);
bool verify_nonneg_range(const CommitParams& params, const Commitment& c,
                         unsigned width, const RangeProof& proof,
                         const Transcript& transcript);

// Single OR-branch primitives, exposed for the simulatability tests.
struct BitOrStatement {
  Commitment bit_commitment;
};
BitOrProof prove_bit(const CommitParams& params, const Commitment& cb, unsigned bit,
                     const Bigint& r, const Transcript& transcript, unsigned index,
                     RandomStream& rng);
bool verify_bit(const CommitParams& params, const Commitment& cb,
                const BitOrProof& proof, const Transcript& transcript,
                unsigned index);
BitOrProof simulate_bit(const CommitParams& params, const Commitment& cb,
                        const Bigint& challenge, RandomStream& rng);
bool check_bit_equations(const CommitParams& params, const Commitment& cb,
                         const BitOrProof& proof, const Bigint& challenge);

void serialize_commitment(ByteWriter& w, const Commitment& c);
Commitment deserialize_commitment(ByteReader& r);

}  // namespace ctzk

#endif  // CTZK_PEDERSEN_H_
