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

#ifndef HSSDT_HSS_PAILLIER_EVALUATOR_H_
#define HSSDT_HSS_PAILLIER_EVALUATOR_H_

#include <cstdint>

#include "hssdt/common/metrics.h"
#include "hssdt/hss/evaluator.h"
#include "hssdt/hss/keys.h"

namespace hssdt {

// Server-side RMS evaluation over Paillier-ElGamal ciphertexts. One
// instance per server per query; not thread-safe (gate counter), but the
// shared ledger is.
class PaillierEvaluator {
 public:
  using Ciphertext = hssdt::Ciphertext;
  using Memory = MemoryValue;

  PaillierEvaluator(const PublicKey& pk, const EvalKey& ek,
                    MetricsLedger* ledger = nullptr);

  uint8_t sigma() const { return ek_.sigma; }
  const BigInt& modulus() const { return pk_.n; }
  uint64_t gates() const { return gates_; }

  Memory TrivialOne() const;
  Memory Zero() const;
  Memory ConvertInput(const Ciphertext& c);
  Memory Mul(const Ciphertext& c, const Memory& m);
  Memory Add(const Memory& a, const Memory& b) const;
  Memory Sub(const Memory& a, const Memory& b) const;
  Memory CMul(const BigInt& k, const Memory& a) const;
  Ciphertext AddCt(const Ciphertext& a, const Ciphertext& b) const;
  Share Output(const Memory& m) const;
  // Throws kUnsupportedModulus unless n_out equals N.
  Share Output(const Memory& m, const BigInt& n_out) const;

 private:
  BigInt Convert(const GroupPair& pair, const Memory& m) const;
  void CheckSigma(const Memory& m) const;

  PublicKey pk_;
  EvalKey ek_;
  MetricsLedger* ledger_;
  uint64_t gates_ = 0;
};

}  // namespace hssdt

#endif  // HSSDT_HSS_PAILLIER_EVALUATOR_H_
