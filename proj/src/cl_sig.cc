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

#include "ctzk/cl_sig.h"

#include <stdexcept>

#include "ctzk/kernels.h"

namespace ctzk {

namespace {

constexpr uint8_t kPubKeyVersion = 1;
constexpr uint8_t kSigVersion = 1;
constexpr uint8_t kPoKVersion = 1;

Bigint reduce(const Bigint& v, const Bigint& q) {
  Bigint out;
  mpz_mod(out.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return out;
}

// CRT exponentiation with known factorization of n.
Bigint powm_crt(const Bigint& base, const Bigint& exp, const CLSecretKey& sk) {
  Bigint n = sk.p * sk.q;
  Bigint vp = powm(reduce(base, sk.p), reduce(exp, sk.p - 1), sk.p);
  Bigint vq = powm(reduce(base, sk.q), reduce(exp, sk.q - 1), sk.q);
  Bigint u = reduce((vq - vp) * invmod(sk.p, sk.q), sk.q);
  return reduce(vp + u * sk.p, n);
}

}  // namespace

Bigint sig_pok_challenge(const CLPublicKey& pk, const CommitParams& params,
                         const Commitment& c_m, const Bigint& v_blinded,
                         const Bigint& t_rsa, const Bigint& t_ped,
                         const Transcript& transcript) {
  Transcript t = transcript.fork("sigpok");
  Sha256Digest pkd = pk.digest();
  t.absorb("pk", pkd);
  t.absorb_int("c_m", c_m.value);
  t.absorb_int("v_blinded", v_blinded);
  t.absorb_int("t_rsa", t_rsa);
  t.absorb_int("t_ped", t_ped);
  return t.challenge("sigpok", params.challenge_bits);
}

CLProfile cl_production_profile() { return CLProfile{.n_bits = 2048}; }

CLProfile cl_toy_profile() {
  CLProfile p{.n_bits = 512};
  p.zk_slack = 40;
  return p;
}

void CLPublicKey::serialize(ByteWriter& w) const {
  w.put_u8(kPubKeyVersion);
  w.put_int(n);
  w.put_int(a);
  w.put_int(b);
  w.put_int(c);
  w.put_u32(profile.n_bits);
  w.put_u32(profile.m_bits);
  w.put_u32(profile.e_bits);
  w.put_u32(profile.s_slack);
  w.put_u32(profile.zk_slack);
}

CLPublicKey CLPublicKey::deserialize(ByteReader& r) {
  if (r.get_u8() != kPubKeyVersion) throw ParseError("cl pubkey: bad version");
  CLPublicKey pk;
  pk.n = r.get_int();
  pk.a = r.get_int();
  pk.b = r.get_int();
  pk.c = r.get_int();
  pk.profile.n_bits = r.get_u32();
  pk.profile.m_bits = r.get_u32();
  pk.profile.e_bits = r.get_u32();
  pk.profile.s_slack = r.get_u32();
  pk.profile.zk_slack = r.get_u32();
  return pk;
}

Sha256Digest CLPublicKey::digest() const {
  ByteWriter w;
  serialize(w);
  return sha256(w.data());
}

void CLSignature::serialize(ByteWriter& w) const {
  w.put_u8(kSigVersion);
  w.put_int(e);
  w.put_int(s);
  w.put_int(v);
}

CLSignature CLSignature::deserialize(ByteReader& r) {
  if (r.get_u8() != kSigVersion) throw ParseError("cl sig: bad version");
  CLSignature sig;
  sig.e = r.get_int();
  sig.s = r.get_int();
  sig.v = r.get_int();
  return sig;
}

CLKeyPair cl_keygen(unsigned modulus_bits, RandomStream& rng, bool toy) {
  if (modulus_bits < 2048 && !toy) {
    throw std::invalid_argument("cl_keygen: modulus below 2048 bits requires toy mode");
  }
  if (modulus_bits < 512 || modulus_bits % 2 != 0) {
    throw std::invalid_argument("cl_keygen: bad modulus width");
  }
  unsigned half = modulus_bits / 2;
  Bigint p = find_safe_prime(half, rng);
  Bigint q;
  do {
    q = find_safe_prime(half, rng);
  } while (q == p);

  CLKeyPair kp;
  kp.sec = CLSecretKey{p, q};
  kp.pub.n = p * q;
  kp.pub.profile = modulus_bits >= 2048 ? cl_production_profile() : cl_toy_profile();
  kp.pub.profile.n_bits = modulus_bits;
  auto random_qr = [&]() {
    while (true) {
      Bigint x = rng.random_below(kp.pub.n);
      if (x <= 1) continue;
      Bigint g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), kp.pub.n.get_mpz_t());
      if (g != 1) continue;
      return mulm(x, x, kp.pub.n);
    }
  };
  kp.pub.a = random_qr();
  kp.pub.b = random_qr();
  kp.pub.c = random_qr();
  return kp;
}

CLSignature cl_sign(const CLSecretKey& sk, const CLPublicKey& pk, const Bigint& m,
                    RandomStream& rng) {
  const CLProfile& prof = pk.profile;
  if (m < 0 || m >= pow2(prof.m_bits)) {
    throw std::invalid_argument("cl_sign: message outside interval");
  }
  Bigint lo = pow2(prof.e_bits - 1);
  Bigint hi = lo + pow2(prof.e_bits - 2);
  Bigint e;
  do {
    e = next_prime(lo + rng.random_bits(prof.e_bits - 2));
  } while (e >= hi);

  Bigint s = rng.random_exact_bits(prof.s_bits());
  Bigint base = mulm(mulm(powm(pk.a, m, pk.n), powm(pk.b, s, pk.n), pk.n), pk.c, pk.n);
  Bigint d = invmod(e, sk.qr_group_order());
  Bigint v = powm_crt(base, d, sk);
  return CLSignature{e, s, v};
}

bool cl_verify(const CLPublicKey& pk, const Bigint& m, const CLSignature& sig) {
  const CLProfile& prof = pk.profile;
  if (m < 0 || m >= pow2(prof.m_bits)) return false;
  Bigint lo = pow2(prof.e_bits - 1);
  Bigint hi = lo + pow2(prof.e_bits - 2);
  if (sig.e <= lo || sig.e >= hi || mpz_odd_p(sig.e.get_mpz_t()) == 0) return false;
  if (!is_probable_prime(sig.e, 15)) return false;
  if (sig.v <= 0 || sig.v >= pk.n || sig.s < 0) return false;
  Bigint lhs = powm(sig.v, sig.e, pk.n);
  Bigint rhs =
      mulm(mulm(powm(pk.a, m, pk.n), powm(pk.b, sig.s, pk.n), pk.n), pk.c, pk.n);
  return lhs == rhs;
}

// --- Proof of knowledge ------------------------------------------------------

CLPoKSession::CLPoKSession(const CLPublicKey& pk, const Bigint& m,
                           const CLSignature& sig, const CommitParams& params,
                           const Bigint& commit_randomness, RandomStream& rng)
    : pk_(pk), params_(params), m_(m), r_commit_(commit_randomness) {
  const CLProfile& prof = pk.profile;
  e_off_ = sig.e - pow2(prof.e_bits - 1);
  if (e_off_ < 0) throw std::invalid_argument("cl pok: exponent below interval");

  Bigint r_v = rng.random_bits(prof.n_bits + prof.zk_slack);
  v_blinded_ = mulm(sig.v, powm(pk.b, r_v, pk.n), pk.n);
  s_prime_ = sig.s + sig.e * r_v;

  unsigned lc = params.challenge_bits;
  r_e_ = rng.random_bits(prof.e_bits - 2 + lc + prof.zk_slack);
  r_m_ = rng.random_bits(prof.m_bits + lc + prof.zk_slack);
  r_s_ = rng.random_bits(prof.s_prime_bits() + lc + prof.zk_slack);
  r_r_ = rng.random_below(params.q);

  Bigint a_inv = invmod(pk.a, pk.n);
  Bigint b_inv = invmod(pk.b, pk.n);
  t_rsa_ = mulm(mulm(powm(v_blinded_, r_e_, pk.n), powm(a_inv, r_m_, pk.n), pk.n),
                powm(b_inv, r_s_, pk.n), pk.n);
  t_ped_ = mulm(powm(params.g, reduce(r_m_, params.q), params.p),
                powm(params.h, r_r_, params.p), params.p);
}

SigPoK CLPoKSession::respond(const Bigint& challenge) const {
  SigPoK pok;
  pok.v_blinded = v_blinded_;
  pok.t_rsa = t_rsa_;
  pok.t_ped = t_ped_;
  pok.challenge = challenge;
  pok.z_e = r_e_ + challenge * e_off_;
  pok.z_m = r_m_ + challenge * m_;
  pok.z_s = r_s_ + challenge * s_prime_;
  pok.z_r = reduce(r_r_ + challenge * r_commit_, params_.q);
  return pok;
}

bool cl_pok_check(const CLPublicKey& pk, const CommitParams& params,
                  const Commitment& c_m, const SigPoK& pok) {
  const CLProfile& prof = pk.profile;
  unsigned lc = params.challenge_bits;

  if (pok.v_blinded <= 0 || pok.v_blinded >= pk.n) return false;
  if (pok.t_rsa <= 0 || pok.t_rsa >= pk.n) return false;
  if (pok.t_ped <= 0 || pok.t_ped >= params.p) return false;
  if (pok.challenge < 0 || pok.challenge >= pow2(lc)) return false;
  if (pok.z_r < 0 || pok.z_r >= params.q) return false;
  if (pok.z_e < 0 || pok.z_e >= pow2(prof.e_bits - 2 + lc + prof.zk_slack + 1)) {
    return false;
  }
  if (pok.z_m < 0 || pok.z_m >= pow2(prof.m_bits + lc + prof.zk_slack + 1)) {
    return false;
  }
  if (pok.z_s < 0 || pok.z_s >= pow2(prof.s_prime_bits() + lc + prof.zk_slack + 1)) {
    return false;
  }
  Bigint gcd;
  mpz_gcd(gcd.get_mpz_t(), pok.v_blinded.get_mpz_t(), pk.n.get_mpz_t());
  if (gcd != 1) return false;

  // RSA group: v'^(z_e + ch*2^(l_e - 1)) * a^-z_m * b^-z_s == t_rsa * c^ch.
  Bigint a_inv = invmod(pk.a, pk.n);
  Bigint b_inv = invmod(pk.b, pk.n);
  Bigint exp_v = pok.z_e + pok.challenge * pow2(prof.e_bits - 1);
  Bigint lhs = mulm(mulm(powm(pok.v_blinded, exp_v, pk.n),
                         powm(a_inv, pok.z_m, pk.n), pk.n),
                    powm(b_inv, pok.z_s, pk.n), pk.n);
  Bigint rhs = mulm(pok.t_rsa, powm(pk.c, pok.challenge, pk.n), pk.n);
  if (lhs != rhs) return false;

  // Commitment group: g^z_m * h^z_r == t_ped * c_m^ch.
  if (!params.in_group(c_m.value)) return false;
  Bigint lhs_p = mulm(powm(params.g, reduce(pok.z_m, params.q), params.p),
                      powm(params.h, pok.z_r, params.p), params.p);
  Bigint rhs_p = mulm(pok.t_ped,
                      powm(c_m.value, reduce(pok.challenge, params.q), params.p),
                      params.p);
  return lhs_p == rhs_p;
}

SigPoK prove_sig_knowledge(const CLPublicKey& pk, const Bigint& m,
                           const CLSignature& sig, const CommitParams& params,
                           const Commitment& c_m, const Bigint& commit_randomness,
                           const Transcript& transcript, RandomStream& rng) {
  if (!cl_verify(pk, m, sig)) {
    throw std::invalid_argument("prove_sig_knowledge: signature invalid");
  }
  if (!verify_opening(params, c_m, m, commit_randomness)) {
    throw std::invalid_argument("prove_sig_knowledge: commitment mismatch");
  }
  CLPoKSession session(pk, m, sig, params, commit_randomness, rng);
  Bigint ch = sig_pok_challenge(pk, params, c_m, session.v_blinded(), session.t_rsa(),
                            session.t_ped(), transcript);
  return session.respond(ch);
}

bool verify_sig_knowledge(const CLPublicKey& pk, const CommitParams& params,
                          const Commitment& c_m, const SigPoK& pok,
                          const Transcript& transcript) {
  if (pok.challenge != sig_pok_challenge(pk, params, c_m, pok.v_blinded, pok.t_rsa,
                                     pok.t_ped, transcript)) {
    return false;
  }
  return cl_pok_check(pk, params, c_m, pok);
}

bool cl_pok_extract(const CLPublicKey& pk, const SigPoK& first, const SigPoK& second,
                    Bigint* m_out, CLSignature* sig_out) {
  if (first.v_blinded != second.v_blinded || first.t_rsa != second.t_rsa) return false;
  Bigint dch = first.challenge - second.challenge;
  if (dch == 0) return false;
  Bigint dm = first.z_m - second.z_m;
  Bigint de = first.z_e - second.z_e;
  Bigint ds = first.z_s - second.z_s;
  if (dm % dch != 0 || de % dch != 0 || ds % dch != 0) return false;
  *m_out = dm / dch;
  sig_out->e = de / dch + pow2(pk.profile.e_bits - 1);
  sig_out->s = ds / dch;
  sig_out->v = first.v_blinded;
  return true;
}

void SigPoK::serialize(ByteWriter& w) const {
  w.put_u8(kPoKVersion);
  w.put_int(v_blinded);
  w.put_int(t_rsa);
  w.put_int(t_ped);
  w.put_int(challenge);
  w.put_int(z_e);
  w.put_int(z_m);
  w.put_int(z_s);
  w.put_int(z_r);
}

SigPoK SigPoK::deserialize(ByteReader& r) {
  if (r.get_u8() != kPoKVersion) throw ParseError("sig pok: bad version");
  SigPoK pok;
  pok.v_blinded = r.get_int();
  pok.t_rsa = r.get_int();
  pok.t_ped = r.get_int();
  pok.challenge = r.get_int();
  pok.z_e = r.get_int();
  pok.z_m = r.get_int();
  pok.z_s = r.get_int();
  pok.z_r = r.get_int();
  return pok;
}

}  // namespace ctzk
