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

#ifndef HSSDT_HSS_PARAMS_H_
#define HSSDT_HSS_PARAMS_H_

#include <cstddef>
#include <string>

#include "hssdt/common/bigint.h"

namespace hssdt {

enum class Profile : uint8_t { kTest = 0, kDefault = 1 };

std::string ProfileName(Profile p);
Profile ParseProfile(const std::string& name);  // throws kDomain

struct HssParams {
  Profile profile = Profile::kDefault;
  size_t security_bits = 128;
  size_t modulus_bits = 3072;
  // Plaintext comparison width used when a model does not say otherwise.
  size_t t_bits = 10;
  // Bit length bound of the secret key d. Kept short so that d times any
  // small memory value stays far below N.
  size_t key_bits = 256;
  // Test profile only: keep d, p, q so tests can decrypt.
  bool key_escrow = false;

  static HssParams Test();
  static HssParams Default();
  static HssParams ForProfile(Profile p);

  // Throws kDomain on inconsistent settings.
  void Validate() const;

  // Serialized width of one element mod N^2.
  size_t ElementBytes() const { return ByteWidth(2 * modulus_bits); }
  size_t CiphertextBytes() const { return 4 * ElementBytes(); }
  // Serialized width of one share mod N.
  size_t ShareBytes() const { return ByteWidth(modulus_bits); }

  // Magnitude bound (in bits) for values fed into Mul as memory values.
  // Below it, share conversion is exact except with probability about
  // 2^-security_bits per gate.
  size_t ExactBoundBits() const {
    return modulus_bits - key_bits - security_bits - 2;
  }
};

bool operator==(const HssParams& a, const HssParams& b);

}  // namespace hssdt

#endif  // HSSDT_HSS_PARAMS_H_
