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

#include <set>

#include "ctzk/pedersen.h"
#include "ctzk/profiles.h"

using namespace ctzk;

namespace {

SystemRandom g_rng;

// The 11-element subgroup of Z_23*: p=23, q=11, g=4, h=9.
CommitParams tiny_params() {
  return CommitParams::from_group(23, 11, 4, "toy", Bigint(9));
}

}  // namespace

TEST_CASE("explicit toy group: h derived by hash-to-group lands in subgroup") {
  CommitParams params = CommitParams::from_group(23, 11, 4, "toy");
  // Brute-force subgroup membership in Z_23*.
  std::set<Bigint> subgroup;
  for (Bigint v = 1, i = 0; i < 11; ++i) {
    subgroup.insert(v);
    v = v * 4 % 23;
  }
  CHECK(subgroup.size() == 11);
  CHECK(subgroup.count(params.h) == 1);
  CHECK(params.h != 1);
  CHECK_NOTHROW(params.validate());
}

TEST_CASE("setup is deterministic per seed label") {
  CommitParams a = CommitParams::setup({.p_bits = 512, .q_bits = 256}, "same-seed");
  CommitParams b = CommitParams::setup({.p_bits = 512, .q_bits = 256}, "same-seed");
  CHECK(a.p == b.p);
  CHECK(a.q == b.q);
  CHECK(a.g == b.g);
  CHECK(a.h == b.h);
  CHECK(bit_length(a.p) == 512);
  CHECK(bit_length(a.q) == 256);
  CHECK((a.p - 1) % a.q == 0);

  CommitParams c = CommitParams::setup({.p_bits = 512, .q_bits = 256}, "other-seed");
  CHECK(a.p != c.p);
}

TEST_CASE("setup rejects q widths below the no-wraparound floor") {
  CHECK(no_wraparound_floor_bits() == 160 + 64 + 2);
  CHECK_THROWS_AS(CommitParams::setup({.p_bits = 512, .q_bits = 128}, "floor"),
                  std::invalid_argument);
}

TEST_CASE("commit matches direct modular exponentiation") {
  CommitParams params = tiny_params();
  // 4^3 * 9^5 mod 23 = 6.
  CHECK(commit(params, 3, 5).value == 6);
  CHECK(commit(params, 0, 0).value == 1);  // group identity
  CHECK_THROWS_AS(commit(params, 11, 0), std::invalid_argument);
  CHECK_THROWS_AS(commit(params, 0, 11), std::invalid_argument);
  CHECK_THROWS_AS(commit(params, -1, 0), std::invalid_argument);
}

TEST_CASE("verify_opening accepts exactly the pairs with g^m h^r = C") {
  CommitParams params = tiny_params();
  Commitment c = commit(params, 3, 5);
  CHECK(verify_opening(params, c, 3, 5));
  CHECK_FALSE(verify_opening(params, c, 4, 5));
  CHECK_FALSE(verify_opening(params, c, 3, 6));  // 4^3 * 9^6 mod 23 = 8 != 6

  // Exhaustive binding scan over the whole toy plane.
  int accepted = 0;
  for (int m = 0; m < 11; ++m) {
    for (int r = 0; r < 11; ++r) {
      bool expect = (powm(params.g, m, params.p) * powm(params.h, r, params.p) %
                     params.p) == c.value;
      CHECK(verify_opening(params, c, m, r) == expect);
      accepted += expect;
    }
  }
  // Pedersen perfect hiding: one opening per possible message.
  CHECK(accepted == 11);
}

TEST_CASE("combine homomorphism") {
  const CommitParams& params = toy_commit_params();
  for (int i = 0; i < 8; ++i) {
    Opening a = random_opening(params, g_rng.random_below(params.q), g_rng);
    Opening b = random_opening(params, g_rng.random_below(params.q), g_rng);
    Commitment ca = commit(params, a), cb = commit(params, b);

    std::array<Term, 2> terms{Term{ca, 1}, Term{cb, 1}};
    Commitment sum = combine(params, terms);
    CHECK(verify_opening(params, sum, (a.m + b.m) % params.q, (a.r + b.r) % params.q));

    // Constant shift: C_{I_x} with k = 1 opens to m + 1.
    std::array<Term, 1> single{Term{ca, 1}};
    Commitment shifted = combine(params, single, 1);
    CHECK(verify_opening(params, shifted, (a.m + 1) % params.q, a.r));

    // Difference: C_a * C_b^-1 opens to a - b.
    std::array<Term, 2> diff_terms{Term{ca, 1}, Term{cb, -1}};
    Commitment diff = combine(params, diff_terms);
    Bigint dm = (a.m - b.m) % params.q;
    if (dm < 0) dm += params.q;
    Bigint dr = (a.r - b.r) % params.q;
    if (dr < 0) dr += params.q;
    CHECK(verify_opening(params, diff, dm, dr));
  }
  CHECK_THROWS_AS(combine(toy_commit_params(), std::span<const Term>{}),
                  std::invalid_argument);
}

TEST_CASE("equality proof: completeness, prover refusal, transcript binding") {
  const CommitParams& params = toy_commit_params();
  Transcript tr("eq-test");
  Opening o1 = random_opening(params, 7, g_rng);
  Opening o2 = random_opening(params, 7, g_rng);
  Commitment c1 = commit(params, o1), c2 = commit(params, o2);

  EqProof proof = prove_equal(params, c1, o1, c2, o2, tr, g_rng);
  CHECK(verify_equal(params, c1, c2, proof, tr));

  // Honest prover refuses differing messages.
  Opening o3 = random_opening(params, 8, g_rng);
  Commitment c3 = commit(params, o3);
  CHECK_THROWS_AS(prove_equal(params, c1, o1, c3, o3, tr, g_rng),
                  std::invalid_argument);

  // A proof bound to (c1, c2) must not verify against (c1, c3),
  // even when c3 hides the same message.
  Opening o4 = random_opening(params, 7, g_rng);
  Commitment c4 = commit(params, o4);
  CHECK_FALSE(verify_equal(params, c1, c4, proof, tr));

  // Nor under a different ambient transcript.
  Transcript other("eq-test-other");
  CHECK_FALSE(verify_equal(params, c1, c2, proof, other));

  // Forged proofs over differing messages fail.
  SchnorrSession forged(params, o1.r - o3.r, g_rng);
  Bigint ch = equality_challenge(params, c1, c3, forged.announcement(), tr);
  EqProof bad{forged.announcement(), ch, forged.respond(ch)};
  CHECK_FALSE(verify_equal(params, c1, c3, bad, tr));
}

TEST_CASE("equality simulator produces verifying transcripts") {
  const CommitParams& params = toy_commit_params();
  // Commitments to different messages: the simulator still succeeds, which
  // is exactly the zero-knowledge property.
  Commitment c1 = commit(params, random_opening(params, 1, g_rng));
  Commitment c2 = commit(params, random_opening(params, 2, g_rng));
  for (int i = 0; i < 10; ++i) {
    Bigint challenge = g_rng.random_bits(params.challenge_bits);
    EqProof sim = simulate_equal(params, c1, c2, challenge, g_rng);
    Bigint y = mulm(c1.value, invmod(c2.value, params.p), params.p);
    CHECK(schnorr_check(params, y, sim.announcement, sim.challenge, sim.response));
  }
}

TEST_CASE("range proof accepts [1, 2^W) and nothing else at small width") {
  const CommitParams& params = toy_commit_params();
  Transcript tr("range-test");
  const unsigned kW = 4;

  // Every member of [1, 16) proves and verifies.
  for (int m = 1; m < 16; ++m) {
    Opening o = random_opening(params, m, g_rng);
    Commitment c = commit(params, o);
    RangeProof proof = prove_nonneg_range(params, c, o, kW, tr, g_rng);
    CHECK(verify_nonneg_range(params, c, kW, proof, tr));
  }

  // Prover refuses both boundaries.
  Opening zero = random_opening(params, 0, g_rng);
  CHECK_THROWS_AS(prove_nonneg_range(params, commit(params, zero), zero, kW, tr, g_rng),
                  std::invalid_argument);
  Opening too_big = random_opening(params, 16, g_rng);
  CHECK_THROWS_AS(
      prove_nonneg_range(params, commit(params, too_big), too_big, kW, tr, g_rng),
      std::invalid_argument);
  Opening wrap = random_opening(params, params.q - 1, g_rng);
  CHECK_THROWS_AS(prove_nonneg_range(params, commit(params, wrap), wrap, kW, tr, g_rng),
                  std::invalid_argument);

  // Wraparound attack oracle: enumerate all digit vectors of width 4; the
  // reachable value set is exactly [1, 16), so q-1 (= -1 mod q) has no
  // decomposition.
  std::set<Bigint> reachable;
  const Bigint weights[4] = {1, 2, 4, 7};
  for (unsigned mask = 0; mask < 16; ++mask) {
    Bigint sum = 1;
    for (unsigned b = 0; b < 4; ++b) {
      if (mask & (1u << b)) sum += weights[b];
    }
    reachable.insert(sum);
  }
  CHECK(reachable.size() == 15);
  CHECK(*reachable.begin() == 1);
  CHECK(*reachable.rbegin() == 15);
  CHECK(reachable.count(params.q - 1) == 0);

  // A valid proof for m replayed against a commitment to q-1 rejects.
  Opening o5 = random_opening(params, 5, g_rng);
  Commitment c5 = commit(params, o5);
  RangeProof p5 = prove_nonneg_range(params, c5, o5, kW, tr, g_rng);
  CHECK_FALSE(verify_nonneg_range(params, commit(params, wrap), kW, p5, tr));
  // Width mismatch rejects.
  CHECK_FALSE(verify_nonneg_range(params, c5, 5, p5, tr));
}

TEST_CASE("timestamp-width range proof at W=64") {
  const CommitParams& params = toy_commit_params();
  Transcript tr("range64");
  for (Bigint m : {Bigint(1), Bigint(12345), Bigint(pow2(64) - 1)}) {
    Opening o = random_opening(params, m, g_rng);
    Commitment c = commit(params, o);
    RangeProof proof = prove_nonneg_range(params, c, o, kTimestampRangeBits, tr, g_rng);
    CHECK(proof.bit_commitments.size() == 64);
    CHECK(verify_nonneg_range(params, c, kTimestampRangeBits, proof, tr));
  }
}

TEST_CASE("single-element mutations of a range proof never verify") {
  // Special-soundness fuzz: flip one transcript element at a time; all 1000
  // mutations must be rejected.
  CommitParams params = tiny_params();
  Transcript tr("range-fuzz");
  const unsigned kW = 4;
  Opening o = random_opening(params, 6, g_rng);
  Commitment c = commit(params, o);
  RangeProof proof = prove_nonneg_range(params, c, o, kW, tr, g_rng);
  REQUIRE(verify_nonneg_range(params, c, kW, proof, tr));

  int accepted = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    RangeProof mutated = proof;
    size_t bit = g_rng.random_below(kW).get_ui();
    Bigint mask = pow2(params.challenge_bits);
    switch (g_rng.random_below(7).get_ui()) {
      case 0:
        mutated.bit_commitments[bit].value =
            (mutated.bit_commitments[bit].value + 1) % params.p;
        break;
      case 1:
        mutated.bit_proofs[bit].a0 = (mutated.bit_proofs[bit].a0 + 1) % params.p;
        break;
      case 2:
        mutated.bit_proofs[bit].a1 = (mutated.bit_proofs[bit].a1 + 1) % params.p;
        break;
      case 3:
        mutated.bit_proofs[bit].c0 = (mutated.bit_proofs[bit].c0 + 1) % mask;
        break;
      case 4:
        mutated.bit_proofs[bit].z0 = (mutated.bit_proofs[bit].z0 + 1) % params.q;
        break;
      case 5:
        mutated.bit_proofs[bit].z1 = (mutated.bit_proofs[bit].z1 + 1) % params.q;
        break;
      case 6:
        mutated.consistency.response = (mutated.consistency.response + 1) % params.q;
        break;
    }
    if (verify_nonneg_range(params, c, kW, mutated, tr)) ++accepted;
  }
  CHECK(accepted == 0);
}

TEST_CASE("bit OR-proof simulator produces verifying transcripts") {
  const CommitParams& params = toy_commit_params();
  // Simulate for a commitment to neither 0 nor 1.
  Commitment cb = commit(params, random_opening(params, 5, g_rng));
  for (int i = 0; i < 10; ++i) {
    Bigint challenge = g_rng.random_bits(params.challenge_bits);
    BitOrProof sim = simulate_bit(params, cb, challenge, g_rng);
    CHECK(check_bit_equations(params, cb, sim, challenge));
  }
}

TEST_CASE("params serialization round trip") {
  CommitParams params = tiny_params();
  ByteWriter w;
  params.serialize(w);
  ByteReader r(w.data());
  CommitParams back = CommitParams::deserialize(r);
  CHECK(back.p == params.p);
  CHECK(back.q == params.q);
  CHECK(back.g == params.g);
  CHECK(back.h == params.h);
  CHECK(back.label == params.label);
  CHECK(back.challenge_bits == params.challenge_bits);
  CHECK_NOTHROW(back.validate());
}
