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
// RSA-based Camenisch-Lysyanskaya signatures over a special RSA modulus
// (product of two safe primes), with a zero-knowledge proof of knowledge of
// a signature on a message hidden inside a Pedersen commitment. The proof
// works across the two groups: Schnorr-style responses over the integers
// satisfy the CL verification relation in the RSA group and simultaneously
// open the commitment in the known-order group.

#ifndef CTZK_CL_SIG_H_
#define CTZK_CL_SIG_H_

#include <string>

#include "ctzk/bignum.h"
#include "ctzk/encoding.h"
#include "ctzk/hashing.h"
#include "ctzk/pedersen.h"
#include "ctzk/random.h"

namespace ctzk {

// Message and length parameters. The message interval [0, 2^226) houses the
// signed values used by the log: 160-bit hash scalars, 161-bit sums
// T + H(e) and I + H(e), and 224-bit concatenations I*2^160 + H(e).
struct CLProfile {
  unsigned n_bits;          // RSA modulus width
  unsigned m_bits = 226;    // message interval width
  unsigned e_bits = 228;    // prime exponent width (m_bits + 2)
  unsigned s_slack = 80;    // statistical slack in s:  l_s = n + m + slack
  unsigned zk_slack = 128;  // statistical hiding slack in the PoK

  unsigned s_bits() const { return n_bits + m_bits + s_slack; }
  // s' = s + e * r_v after blinding; responses are sized against this bound.
  unsigned s_prime_bits() const { return n_bits + zk_slack + e_bits + 1; }
};

CLProfile cl_production_profile();  // 2048-bit modulus
CLProfile cl_toy_profile();         // 512-bit modulus, test suites only

struct CLPublicKey {
  Bigint n;        // special RSA modulus
  Bigint a, b, c;  // quadratic-residue bases
  CLProfile profile;

  void serialize(ByteWriter& w) const;
  static CLPublicKey deserialize(ByteReader& r);
  Sha256Digest digest() const;
};

struct CLSecretKey {
  Bigint p, q;  // safe primes, n = p*q

  Bigint qr_group_order() const { return (p - 1) / 2 * ((q - 1) / 2); }
};

struct CLKeyPair {
  CLPublicKey pub;
  CLSecretKey sec;
};

// v^e = a^m * b^s * c (mod n); e an odd prime in its prescribed interval.
struct CLSignature {
  Bigint e, s, v;

  void serialize(ByteWriter& w) const;
  static CLSignature deserialize(ByteReader& r);
};

// keygen with modulus_bits below 2048 requires toy=true (test suites).
CLKeyPair cl_keygen(unsigned modulus_bits, RandomStream& rng, bool toy = false);

CLSignature cl_sign(const CLSecretKey& sk, const CLPublicKey& pk, const Bigint& m,
                    RandomStream& rng);
bool cl_verify(const CLPublicKey& pk, const Bigint& m, const CLSignature& sig);

// Proof of knowledge of (m, sig) where sig verifies under pk and the
// Pedersen commitment c_m opens to m. Verifies only against the
// (public key, commitment) pair it was built for.
struct SigPoK {
  Bigint v_blinded;  // v * b^{r_v}: the commitment to the signature
  Bigint t_rsa;      // announcement in the RSA group
  Bigint t_ped;      // announcement in the commitment group
  Bigint challenge;
  Bigint z_e, z_m, z_s;  // integer responses (RSA side)
  Bigint z_r;            // mod-q response opening the commitment link

  void serialize(ByteWriter& w) const;
  static SigPoK deserialize(ByteReader& r);
};

// Interactive prover session; the Fiat-Shamir wrapper drives it, and the
// extractability tests rewind it with two different challenges.
class CLPoKSession {
 public:
  CLPoKSession(const CLPublicKey& pk, const Bigint& m, const CLSignature& sig,
               const CommitParams& params, const Bigint& commit_randomness,
               RandomStream& rng);

  const Bigint& v_blinded() const { return v_blinded_; }
  const Bigint& t_rsa() const { return t_rsa_; }
  const Bigint& t_ped() const { return t_ped_; }

  // May be called repeatedly with different challenges (rewinding).
  SigPoK respond(const Bigint& challenge) const;

 private:
  const CLPublicKey& pk_;
  const CommitParams& params_;
  Bigint m_, e_off_, s_prime_, r_commit_;
  Bigint v_blinded_, t_rsa_, t_ped_;
  Bigint r_e_, r_m_, r_s_, r_r_;
};

// Core check with an externally supplied challenge (interactive mode).
bool cl_pok_check(const CLPublicKey& pk, const CommitParams& params,
                  const Commitment& c_m, const SigPoK& pok);

// Fiat-Shamir challenge for a signature PoK statement.
Bigint sig_pok_challenge(const CLPublicKey& pk, const CommitParams& params,
                         const Commitment& c_m, const Bigint& v_blinded,
                         const Bigint& t_rsa, const Bigint& t_ped,
                         const Transcript& transcript);

// Non-interactive transport. The transcript binds the public key, the
// commitment, and the statement context supplied by the caller.
SigPoK prove_sig_knowledge(const CLPublicKey& pk, const Bigint& m,
                           const CLSignature& sig, const CommitParams& params,
                           const Commitment& c_m, const Bigint& commit_randomness,
                           const Transcript& transcript, RandomStream& rng);
bool verify_sig_knowledge(const CLPublicKey& pk, const CommitParams& params,
                          const Commitment& c_m, const SigPoK& pok,
                          const Transcript& transcript);

// Extracts (m, signature) from two accepting responses of one session.
// Returns false when the transcripts do not admit an extraction.
bool cl_pok_extract(const CLPublicKey& pk, const SigPoK& first, const SigPoK& second,
                    Bigint* m_out, CLSignature* sig_out);

}  // namespace ctzk

#endif  // CTZK_CL_SIG_H_
