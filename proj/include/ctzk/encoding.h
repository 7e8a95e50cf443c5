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

#ifndef CTZK_ENCODING_H_
#define CTZK_ENCODING_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctzk/bignum.h"

namespace ctzk {

// Wire convention used by every serialized object in the project: big-endian
// fixed-width integers, and variable-length fields (byte blobs and bignum
// magnitudes) prefixed with a 32-bit big-endian length.

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ByteWriter {
 public:
  void put_u8(uint8_t v);
  void put_u16(uint16_t v);
  void put_u32(uint32_t v);
  void put_u64(uint64_t v);
  void put_bytes(std::span<const uint8_t> bytes);          // raw, no prefix
  void put_blob(std::span<const uint8_t> bytes);           // u32 length prefix
  void put_int(const Bigint& v);                           // u32 length prefix

  const std::vector<uint8_t>& data() const { return buf_; }
  std::vector<uint8_t> take() { return std::move(buf_); }
  size_t size() const { return buf_.size(); }

 private:
  std::vector<uint8_t> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t get_u8();
  uint16_t get_u16();
  uint32_t get_u32();
  uint64_t get_u64();
  std::vector<uint8_t> get_bytes(size_t n);
  std::vector<uint8_t> get_blob();
  Bigint get_int();

  bool done() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }
  void expect_done() const;

 private:
  void need(size_t n) const;
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

std::string base64_encode(std::span<const uint8_t> data);
std::vector<uint8_t> base64_decode(std::string_view text);

std::string hex_encode(std::span<const uint8_t> data);

inline std::span<const uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

}  // namespace ctzk

#endif  // CTZK_ENCODING_H_
