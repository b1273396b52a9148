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

#ifndef HSSDT_TESTS_SUPPORT_TEST_KEYS_H_
#define HSSDT_TESTS_SUPPORT_TEST_KEYS_H_

#include <utility>

#include "hssdt/hss/keys.h"
#include "hssdt/hss/oracle_evaluator.h"
#include "hssdt/hss/paillier_evaluator.h"

namespace hssdt::testing {

// Seeded 512-bit test-profile keys, generated once per process.
const KeySet& TestKeys();
const Encryptor& TestEncryptor();
// Oracle key sharing the test modulus.
const OracleKey& TestOracleKey();

// Reconstructs x and d*x from the two servers' memory values.
std::pair<BigInt, BigInt> Open(const MemoryValue& m0, const MemoryValue& m1,
                               const BigInt& n);

}  // namespace hssdt::testing

#endif  // HSSDT_TESTS_SUPPORT_TEST_KEYS_H_
