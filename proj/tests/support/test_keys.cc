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

#include "test_keys.h"

namespace hssdt::testing {

const KeySet& TestKeys() {
  static const KeySet keys = [] {
    SeededRandom rng(20261017);
    return Setup(HssParams::Test(), rng);
  }();
  return keys;
}

const Encryptor& TestEncryptor() {
  static const Encryptor enc(TestKeys().pk);
  return enc;
}

const OracleKey& TestOracleKey() {
  static const OracleKey key = MakeOracleKey(TestKeys().pk.n, 77);
  return key;
}

std::pair<BigInt, BigInt> Open(const MemoryValue& m0, const MemoryValue& m1,
                               const BigInt& n) {
  return {Mod(m1.x_share - m0.x_share, n), Mod(m1.dx_share - m0.dx_share, n)};
}

}  // namespace hssdt::testing
