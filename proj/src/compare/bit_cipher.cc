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

#include "hssdt/compare/bit_cipher.h"

#include "hssdt/compare/fixed_point.h"

namespace hssdt {

std::vector<Ciphertext> EncryptBits(const Encryptor& enc, uint64_t v, uint32_t t,
                                    RandomSource& rng) {
  std::vector<Ciphertext> out;
  out.reserve(t);
  for (uint8_t b : BitDecompose(v, t)) out.push_back(enc.Encrypt(int64_t{b}, rng));
  return out;
}

std::vector<OracleCiphertext> OracleBits(const OracleKey& key, uint64_t v,
                                         uint32_t t) {
  std::vector<OracleCiphertext> out;
  for (uint8_t b : BitDecompose(v, t)) out.push_back(OracleInput(key, b));
  return out;
}

}  // namespace hssdt
