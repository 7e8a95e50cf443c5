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

#include "ctzk/cl_sig.h"
#include "ctzk/profiles.h"

using namespace ctzk;

namespace {

SystemRandom g_rng;

const CLKeyPair& toy_key() {
  static const CLKeyPair kp = cl_keygen(kToyClBits, g_rng, /*toy=*/true);
  return kp;
}

}  // namespace

TEST_CASE("keygen produces a special RSA modulus with QR bases") {
  const CLKeyPair& kp = toy_key();
  CHECK(kp.sec.p * kp.sec.q == kp.pub.n);
  CHECK(is_probable_prime(kp.sec.p));
  CHECK(is_probable_prime(kp.sec.q));
  CHECK(is_probable_prime((kp.sec.p - 1) / 2));
  CHECK(is_probable_prime((kp.sec.q - 1) / 2));
  CHECK(bit_length(kp.pub.n) == kToyClBits);

  // a, b, c are quadratic residues: x^ord = 1 for the QR group order.
  Bigint ord = kp.sec.qr_group_order();
  CHECK(powm(kp.pub.a, ord, kp.pub.n) == 1);
  CHECK(powm(kp.pub.b, ord, kp.pub.n) == 1);
  CHECK(powm(kp.pub.c, ord, kp.pub.n) == 1);

  CHECK_THROWS_AS(cl_keygen(1024, g_rng, /*toy=*/false), std::invalid_argument);
}

TEST_CASE("two keygen calls give distinct moduli") {
  CLKeyPair other = cl_keygen(kToyClBits, g_rng, /*toy=*/true);
  CHECK(other.pub.n != toy_key().pub.n);
}

TEST_CASE("sign/verify round trip and tamper rejection") {
  const CLKeyPair& kp = toy_key();
  for (Bigint m : {Bigint(0), Bigint(1), Bigint(pow2(160) - 1), Bigint(pow2(226) - 1)}) {
    CLSignature sig = cl_sign(kp.sec, kp.pub, m, g_rng);
    CHECK(cl_verify(kp.pub, m, sig));
    CHECK_FALSE(cl_verify(kp.pub, m + 1, sig));

    // Recompute v^e against a^m b^s c with v doubled.
    CLSignature bad = sig;
    bad.v = mulm(bad.v, 2, kp.pub.n);
    CHECK(powm(bad.v, bad.e, kp.pub.n) !=
          mulm(mulm(powm(kp.pub.a, m, kp.pub.n), powm(kp.pub.b, bad.s, kp.pub.n),
                    kp.pub.n),
               kp.pub.c, kp.pub.n));
    CHECK_FALSE(cl_verify(kp.pub, m, bad));
  }
  CHECK_THROWS_AS(cl_sign(kp.sec, kp.pub, pow2(226), g_rng), std::invalid_argument);
  CHECK_THROWS_AS(cl_sign(kp.sec, kp.pub, Bigint(-1), g_rng), std::invalid_argument);
}

TEST_CASE("signature parameters match the prescribed interval") {
  const CLKeyPair& kp = toy_key();
  CLSignature sig = cl_sign(kp.sec, kp.pub, 42, g_rng);
  Bigint lo = pow2(kp.pub.profile.e_bits - 1);
  CHECK(sig.e > lo);
  CHECK(sig.e < lo + pow2(kp.pub.profile.e_bits - 2));
  CHECK(is_probable_prime(sig.e));
  CHECK(bit_length(sig.s) == kp.pub.profile.s_bits());
}

TEST_CASE("unforgeability smoke test: random signatures never verify") {
  const CLKeyPair& kp = toy_key();
  CLSignature real = cl_sign(kp.sec, kp.pub, 7, g_rng);
  int accepted = 0;
  for (int i = 0; i < 10'000; ++i) {
    Bigint m = g_rng.random_bits(kp.pub.profile.m_bits);
    CLSignature forged;
    forged.e = real.e;  // valid prime in the interval; the equation must fail
    forged.s = g_rng.random_bits(kp.pub.profile.s_bits());
    forged.v = g_rng.random_below(kp.pub.n);
    if (cl_verify(kp.pub, m, forged)) ++accepted;
  }
  CHECK(accepted == 0);
}

TEST_CASE("signature PoK: completeness over 100 honest proofs") {
  const CLKeyPair& kp = toy_key();
  const CommitParams& params = toy_commit_params();
  Transcript tr("cl-pok");
  for (int i = 0; i < 100; ++i) {
    Bigint m = g_rng.random_bits(kp.pub.profile.m_bits);
    CLSignature sig = cl_sign(kp.sec, kp.pub, m, g_rng);
    Opening o = random_opening(params, m, g_rng);
    Commitment c_m = commit(params, o);
    SigPoK pok = prove_sig_knowledge(kp.pub, m, sig, params, c_m, o.r, tr, g_rng);
    CHECK(verify_sig_knowledge(kp.pub, params, c_m, pok, tr));
  }
}

TEST_CASE("signature PoK binds to its commitment and transcript") {
  const CLKeyPair& kp = toy_key();
  const CommitParams& params = toy_commit_params();
  Transcript tr("cl-pok-bind");
  Bigint m = 12345;
  CLSignature sig = cl_sign(kp.sec, kp.pub, m, g_rng);
  Opening o = random_opening(params, m, g_rng);
  Commitment c_m = commit(params, o);
  SigPoK pok = prove_sig_knowledge(kp.pub, m, sig, params, c_m, o.r, tr, g_rng);
  REQUIRE(verify_sig_knowledge(kp.pub, params, c_m, pok, tr));

  // Fuzz: any other commitment (same or different message) rejects.
  for (int i = 0; i < 50; ++i) {
    Bigint m2 = i % 2 == 0 ? m : g_rng.random_bits(kp.pub.profile.m_bits);
    Commitment other = commit(params, random_opening(params, m2, g_rng));
    CHECK_FALSE(verify_sig_knowledge(kp.pub, params, other, pok, tr));
  }
  // Wrong ambient transcript rejects.
  Transcript other_tr("cl-pok-elsewhere");
  CHECK_FALSE(verify_sig_knowledge(kp.pub, params, c_m, pok, other_tr));

  // Prover refuses a mismatched commitment.
  Commitment wrong = commit(params, random_opening(params, m + 1, g_rng));
  CHECK_THROWS_AS(prove_sig_knowledge(kp.pub, m, sig, params, wrong, o.r, tr, g_rng),
                  std::invalid_argument);
}

TEST_CASE("interactive PoK: rewinding extracts a verifying signature") {
  const CLKeyPair& kp = toy_key();
  const CommitParams& params = toy_commit_params();
  Bigint m = g_rng.random_bits(kp.pub.profile.m_bits);
  CLSignature sig = cl_sign(kp.sec, kp.pub, m, g_rng);
  Opening o = random_opening(params, m, g_rng);
  Commitment c_m = commit(params, o);

  CLPoKSession session(kp.pub, m, sig, params, o.r, g_rng);
  Bigint ch1 = g_rng.random_bits(params.challenge_bits);
  Bigint ch2;
  do {
    ch2 = g_rng.random_bits(params.challenge_bits);
  } while (ch2 == ch1);
  SigPoK first = session.respond(ch1);
  SigPoK second = session.respond(ch2);
  CHECK(cl_pok_check(kp.pub, params, c_m, first));
  CHECK(cl_pok_check(kp.pub, params, c_m, second));

  Bigint m_out;
  CLSignature sig_out;
  REQUIRE(cl_pok_extract(kp.pub, first, second, &m_out, &sig_out));
  CHECK(m_out == m);
  CHECK(cl_verify(kp.pub, m_out, sig_out));
}

TEST_CASE("PoK and signature serialization round trips") {
  const CLKeyPair& kp = toy_key();
  const CommitParams& params = toy_commit_params();
  Transcript tr("cl-serde");
  Bigint m = 99;
  CLSignature sig = cl_sign(kp.sec, kp.pub, m, g_rng);
  {
    ByteWriter w;
    sig.serialize(w);
    ByteReader r(w.data());
    CLSignature back = CLSignature::deserialize(r);
    CHECK(back.e == sig.e);
    CHECK(back.s == sig.s);
    CHECK(back.v == sig.v);
  }
  {
    ByteWriter w;
    kp.pub.serialize(w);
    ByteReader r(w.data());
    CLPublicKey back = CLPublicKey::deserialize(r);
    CHECK(back.n == kp.pub.n);
    CHECK(back.digest() == kp.pub.digest());
  }
  {
    Opening o = random_opening(params, m, g_rng);
    Commitment c_m = commit(params, o);
    SigPoK pok = prove_sig_knowledge(kp.pub, m, sig, params, c_m, o.r, tr, g_rng);
    ByteWriter w;
    pok.serialize(w);
    ByteReader r(w.data());
    SigPoK back = SigPoK::deserialize(r);
    CHECK(verify_sig_knowledge(kp.pub, params, c_m, back, tr));
  }
}
