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

#include "hssdt/common/bytes.h"

#include "hssdt/common/errors.h"

namespace hssdt {

void ByteWriter::U16(uint16_t v) {
  buf_.push_back(static_cast<uint8_t>(v >> 8));
  buf_.push_back(static_cast<uint8_t>(v));
}

void ByteWriter::U32(uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    buf_.push_back(static_cast<uint8_t>(v >> shift));
  }
}

void ByteWriter::U64(uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    buf_.push_back(static_cast<uint8_t>(v >> shift));
  }
}

void ByteWriter::Bytes(std::span<const uint8_t> data) {
  buf_.insert(buf_.end(), data.begin(), data.end());
}

void ByteWriter::LengthPrefixed(std::span<const uint8_t> data) {
  if (data.size() > UINT32_MAX) Fail(ErrorCode::kDomain, "field too long");
  U32(static_cast<uint32_t>(data.size()));
  Bytes(data);
}

void ByteWriter::String(const std::string& s) {
  LengthPrefixed(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

void ByteWriter::FixedBigInt(const BigInt& v, size_t width) {
  AppendFixedBytes(buf_, v, width);
}

void ByteReader::Need(size_t n) const {
  if (n > remaining()) {
    Fail(ErrorCode::kDecode, "truncated input: need " + std::to_string(n) +
                                 " bytes, have " + std::to_string(remaining()));
  }
}

uint8_t ByteReader::U8() {
  Need(1);
  return data_[pos_++];
}

uint16_t ByteReader::U16() {
  Need(2);
  uint16_t v = static_cast<uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]);
  pos_ += 2;
  return v;
}

uint32_t ByteReader::U32() {
  Need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
  pos_ += 4;
  return v;
}

uint64_t ByteReader::U64() {
  Need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_ + i];
  pos_ += 8;
  return v;
}

std::span<const uint8_t> ByteReader::Bytes(size_t n) {
  Need(n);
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::vector<uint8_t> ByteReader::LengthPrefixed() {
  uint32_t n = U32();
  auto s = Bytes(n);
  return {s.begin(), s.end()};
}

std::string ByteReader::String() {
  auto v = LengthPrefixed();
  return {v.begin(), v.end()};
}

BigInt ByteReader::FixedBigInt(size_t width) { return FromBytes(Bytes(width)); }

size_t ByteReader::Count(size_t min_element_bytes) {
  uint32_t n = U32();
  if (min_element_bytes > 0 && n > remaining() / min_element_bytes) {
    Fail(ErrorCode::kDecode, "element count " + std::to_string(n) +
                                 " exceeds remaining input");
  }
  return n;
}

void ByteReader::ExpectEnd() const {
  if (remaining() != 0) {
    Fail(ErrorCode::kDecode,
         std::to_string(remaining()) + " trailing bytes after message");
  }
}

}  // namespace hssdt
