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

#ifndef HSSDT_COMPARE_BIT_CIPHER_H_
#define HSSDT_COMPARE_BIT_CIPHER_H_

#include <cstdint>
#include <vector>

#include "hssdt/common/random.h"
#include "hssdt/hss/keys.h"
#include "hssdt/hss/oracle_evaluator.h"

namespace hssdt {

// LSB-first encryptions of the t bits of v.
std::vector<Ciphertext> EncryptBits(const Encryptor& enc, uint64_t v, uint32_t t,
                                    RandomSource& rng);
std::vector<OracleCiphertext> OracleBits(const OracleKey& key, uint64_t v,
                                         uint32_t t);

}  // namespace hssdt

#endif  // HSSDT_COMPARE_BIT_CIPHER_H_
