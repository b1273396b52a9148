/*
 * Copyright 2026 The hssdt Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HSSDT_COMMON_BYTES_H_
#define HSSDT_COMMON_BYTES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hssdt/common/bigint.h"

namespace hssdt {

// Big-endian writer used by every wire and file encoding.
class ByteWriter {
 public:
  void U8(uint8_t v) { buf_.push_back(v); }
  void U16(uint16_t v);
  void U32(uint32_t v);
  void U64(uint64_t v);
  void Bytes(std::span<const uint8_t> data);
  // u32 length prefix followed by the bytes.
  void LengthPrefixed(std::span<const uint8_t> data);
  void String(const std::string& s);
  void FixedBigInt(const BigInt& v, size_t width);

  const std::vector<uint8_t>& data() const { return buf_; }
  std::vector<uint8_t> Take() { return std::move(buf_); }
  size_t size() const { return buf_.size(); }

 private:
  std::vector<uint8_t> buf_;
};

// Bounds-checked reader; every short read throws kDecode.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t U8();
  uint16_t U16();
  uint32_t U32();
  uint64_t U64();
  std::span<const uint8_t> Bytes(size_t n);
  std::vector<uint8_t> LengthPrefixed();
  std::string String();
  BigInt FixedBigInt(size_t width);

  // Reads a u32 element count and rejects counts that could not possibly fit
  // in the remaining input at `min_element_bytes` each.
  size_t Count(size_t min_element_bytes);

  size_t remaining() const { return data_.size() - pos_; }
  void ExpectEnd() const;

 private:
  void Need(size_t n) const;

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

}  // namespace hssdt

#endif  // HSSDT_COMMON_BYTES_H_
