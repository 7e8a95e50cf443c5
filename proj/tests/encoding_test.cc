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

#include "ctzk/encoding.h"
#include "ctzk/hashing.h"
#include "ctzk/random.h"

using namespace ctzk;

TEST_CASE("writer/reader round trip") {
  ByteWriter w;
  w.put_u8(7);
  w.put_u16(0xBEEF);
  w.put_u32(0xDEADBEEF);
  w.put_u64(0x0123456789ABCDEFull);
  w.put_blob(as_bytes("hello"));
  w.put_int(Bigint("123456789123456789123456789"));

  ByteReader r(w.data());
  CHECK(r.get_u8() == 7);
  CHECK(r.get_u16() == 0xBEEF);
  CHECK(r.get_u32() == 0xDEADBEEF);
  CHECK(r.get_u64() == 0x0123456789ABCDEFull);
  std::vector<uint8_t> blob = r.get_blob();
  CHECK(std::string(blob.begin(), blob.end()) == "hello");
  CHECK(r.get_int() == Bigint("123456789123456789123456789"));
  CHECK(r.done());
}

TEST_CASE("reader rejects truncation and trailing bytes") {
  ByteWriter w;
  w.put_u32(10);  // length prefix promising 10 bytes
  w.put_bytes(as_bytes("abc"));
  ByteReader r(w.data());
  CHECK_THROWS_AS(r.get_blob(), ParseError);

  ByteWriter w2;
  w2.put_u8(1);
  w2.put_u8(2);
  ByteReader r2(w2.data());
  r2.get_u8();
  CHECK_THROWS_AS(r2.expect_done(), ParseError);
}

TEST_CASE("integer encoding is minimal big-endian") {
  CHECK(to_bytes(Bigint(0)).empty());
  CHECK(to_bytes(Bigint(256)) == std::vector<uint8_t>{1, 0});
  CHECK(from_bytes(to_bytes(Bigint("987654321987654321"))) ==
        Bigint("987654321987654321"));

  // A forged non-minimal encoding must not parse.
  ByteWriter w;
  w.put_u32(2);
  w.put_u8(0);
  w.put_u8(5);
  ByteReader r(w.data());
  CHECK_THROWS_AS(r.get_int(), ParseError);
}

TEST_CASE("base64 round trip") {
  SystemRandom rng;
  for (size_t len : {0u, 1u, 2u, 3u, 31u, 32u, 33u, 100u}) {
    std::vector<uint8_t> data(len);
    rng.fill(data.data(), len);
    CHECK(base64_decode(base64_encode(data)) == data);
  }
  CHECK(base64_encode(as_bytes("foob")) == "Zm9vYg==");
}

TEST_CASE("sha256 and the 160-bit hash scalar") {
  // SHA-256 of the empty string, leading 160 bits.
  CHECK(hash_scalar({}, 160) == Bigint("0xe3b0c44298fc1c149afbf4c8996fb92427ae41e4"));
  CHECK(hash_scalar(as_bytes("abc"), 160) < pow2(160));
}

TEST_CASE("deterministic stream reproduces, system stream varies") {
  DrbgStream a("seed"), b("seed"), c("other");
  CHECK(a.random_bits(256) == b.random_bits(256));
  CHECK(a.random_bits(256) == b.random_bits(256));
  DrbgStream a2("seed");
  CHECK(a2.random_bits(256) != c.random_bits(256));

  SystemRandom sys;
  CHECK(sys.random_bits(256) != sys.random_bits(256));
  for (int i = 0; i < 50; ++i) {
    Bigint v = sys.random_below(Bigint(1000));
    CHECK(v >= 0);
    CHECK(v < 1000);
  }
}

TEST_CASE("transcript forks are independent and challenges bind the label") {
  Transcript t("unit");
  t.absorb("a", as_bytes("payload"));
  Transcript f1 = t.fork("s1");
  Transcript f2 = t.fork("s2");
  CHECK(f1.challenge("c", 128) != f2.challenge("c", 128));

  Transcript u("unit");
  u.absorb("a", as_bytes("payload"));
  CHECK(u.fork("s1").challenge("c", 128) == t.fork("s1").challenge("c", 128));
  CHECK(t.challenge("x", 64) < pow2(64));
}
