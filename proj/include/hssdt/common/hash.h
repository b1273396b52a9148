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

#ifndef HSSDT_COMMON_HASH_H_
#define HSSDT_COMMON_HASH_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hssdt/common/bigint.h"

namespace hssdt {

using Digest = std::array<uint8_t, 32>;

Digest Sha256(std::span<const uint8_t> data);
Digest HmacSha256(std::span<const uint8_t> key, std::span<const uint8_t> data);
std::string HexString(std::span<const uint8_t> bytes);

// HMAC-SHA256 keyed PRF with counter-mode expansion.
class Prf {
 public:
  explicit Prf(std::span<const uint8_t> key) : key_(key.begin(), key.end()) {}

  std::vector<uint8_t> Expand(std::span<const uint8_t> input,
                              size_t num_bytes) const;

  // Output reduced mod `modulus` after drawing 128 extra bits, so the bias is
  // below 2^-128.
  BigInt ModN(std::span<const uint8_t> input, const BigInt& modulus) const;

  uint64_t U64(std::span<const uint8_t> input) const;

 private:
  std::vector<uint8_t> key_;
};

}  // namespace hssdt

#endif  // HSSDT_COMMON_HASH_H_
