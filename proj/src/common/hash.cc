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

#include "hssdt/common/hash.h"

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/sha.h>

#include "hssdt/common/errors.h"

namespace hssdt {

Digest Sha256(std::span<const uint8_t> data) {
  Digest out;
  SHA256(data.data(), data.size(), out.data());
  return out;
}

Digest HmacSha256(std::span<const uint8_t> key,
                  std::span<const uint8_t> data) {
  Digest out;
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(),
           data.size(), out.data(), &len) == nullptr ||
      len != out.size()) {
    Fail(ErrorCode::kProtocol, "HMAC-SHA256 failed");
  }
  return out;
}

std::string HexString(std::span<const uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

std::vector<uint8_t> Prf::Expand(std::span<const uint8_t> input,
                                 size_t num_bytes) const {
  std::vector<uint8_t> out;
  out.reserve(num_bytes + 32);
  std::vector<uint8_t> block(input.begin(), input.end());
  block.resize(input.size() + 4);
  for (uint32_t counter = 0; out.size() < num_bytes; ++counter) {
    for (int i = 0; i < 4; ++i) {
      block[input.size() + i] = static_cast<uint8_t>(counter >> (24 - 8 * i));
    }
    Digest d = HmacSha256(key_, block);
    out.insert(out.end(), d.begin(), d.end());
  }
  out.resize(num_bytes);
  return out;
}

BigInt Prf::ModN(std::span<const uint8_t> input, const BigInt& modulus) const {
  size_t bits = mpz_sizeinbase(modulus.get_mpz_t(), 2) + 128;
  std::vector<uint8_t> raw = Expand(input, ByteWidth(bits));
  return Mod(FromBytes(raw), modulus);
}

uint64_t Prf::U64(std::span<const uint8_t> input) const {
  std::vector<uint8_t> raw = Expand(input, 8);
  uint64_t v = 0;
  for (uint8_t b : raw) v = (v << 8) | b;
  return v;
}

}  // namespace hssdt
