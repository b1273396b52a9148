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

#ifndef HSSDT_HSS_ORACLE_EVALUATOR_H_
#define HSSDT_HSS_ORACLE_EVALUATOR_H_

#include <cstdint>
#include <memory>

#include "hssdt/common/metrics.h"
#include "hssdt/common/random.h"
#include "hssdt/hss/evaluator.h"

namespace hssdt {

// Cleartext stand-in with the same instruction set, for differential tests.
// Ciphertexts carry their plaintext; every instruction computes in the
// clear and re-shares with masks drawn from a stream seeded by the key, so
// two evaluators running the same program stay in lockstep.
struct OracleKey {
  BigInt n;
  BigInt d;
  uint64_t seed = 0;
};

OracleKey MakeOracleKey(const BigInt& n, uint64_t seed, size_t key_bits = 128);

struct OracleCiphertext {
  BigInt x;  // residue mod N
  bool operator==(const OracleCiphertext&) const = default;
};

struct OracleMemory {
  uint8_t sigma = 0;
  BigInt x_share;
  BigInt dx_share;
  BigInt plain;  // residue mod N
};

OracleCiphertext OracleInput(const OracleKey& key, const BigInt& x);

class OracleEvaluator {
 public:
  using Ciphertext = OracleCiphertext;
  using Memory = OracleMemory;

  OracleEvaluator(const OracleKey& key, uint8_t sigma,
                  MetricsLedger* ledger = nullptr);

  uint8_t sigma() const { return sigma_; }
  const BigInt& modulus() const { return key_.n; }
  uint64_t gates() const { return gates_; }

  Memory TrivialOne();
  Memory Zero();
  Memory ConvertInput(const Ciphertext& c);
  Memory Mul(const Ciphertext& c, const Memory& m);
  Memory Add(const Memory& a, const Memory& b);
  Memory Sub(const Memory& a, const Memory& b);
  Memory CMul(const BigInt& k, const Memory& a);
  Ciphertext AddCt(const Ciphertext& a, const Ciphertext& b) const;
  Share Output(const Memory& m) const;
  Share Output(const Memory& m, const BigInt& n_out) const;

 private:
  Memory Reshare(const BigInt& plain);
  void CheckSigma(const Memory& m) const;

  OracleKey key_;
  uint8_t sigma_;
  MetricsLedger* ledger_;
  std::shared_ptr<SeededRandom> masks_;
  uint64_t gates_ = 0;
};

}  // namespace hssdt

#endif  // HSSDT_HSS_ORACLE_EVALUATOR_H_
