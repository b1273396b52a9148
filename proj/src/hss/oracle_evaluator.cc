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

#include "hssdt/hss/oracle_evaluator.h"

#include "hssdt/common/errors.h"

namespace hssdt {

static_assert(RmsEvaluator<OracleEvaluator>);

OracleKey MakeOracleKey(const BigInt& n, uint64_t seed, size_t key_bits) {
  SeededRandom rng(seed);
  return {n, rng.Range(1, BigInt(1) << key_bits), seed};
}

OracleCiphertext OracleInput(const OracleKey& key, const BigInt& x) {
  if (sgn(x) < 0 || x >= key.n) {
    Fail(ErrorCode::kDomain, "plaintext outside [0, N)");
  }
  return {x};
}

OracleEvaluator::OracleEvaluator(const OracleKey& key, uint8_t sigma,
                                 MetricsLedger* ledger)
    : key_(key),
      sigma_(sigma),
      ledger_(ledger),
      masks_(std::make_shared<SeededRandom>(key.seed ^ 0x5eed5eed5eed5eedULL)) {
  if (sigma > 1) Fail(ErrorCode::kProtocolMisuse, "sigma must be 0 or 1");
}

OracleMemory OracleEvaluator::Reshare(const BigInt& plain) {
  size_t bits = mpz_sizeinbase(key_.n.get_mpz_t(), 2) + 64;
  BigInt mask_x = Mod(masks_->Bits(bits), key_.n);
  BigInt mask_dx = Mod(masks_->Bits(bits), key_.n);
  BigInt p = Mod(plain, key_.n);
  OracleMemory m{sigma_, mask_x, mask_dx, p};
  if (sigma_ == 1) {
    m.x_share += p;
    m.dx_share += Mod(key_.d * p, key_.n);
  }
  return m;
}

void OracleEvaluator::CheckSigma(const Memory& m) const {
  if (m.sigma != sigma_) {
    Fail(ErrorCode::kProtocolMisuse, "memory value belongs to the other server");
  }
}

OracleMemory OracleEvaluator::TrivialOne() { return Reshare(1); }
OracleMemory OracleEvaluator::Zero() { return Reshare(0); }

OracleMemory OracleEvaluator::Mul(const Ciphertext& c, const Memory& m) {
  CheckSigma(m);
  ++gates_;
  if (ledger_ != nullptr) ledger_->RecordMul();
  return Reshare(c.x * m.plain);
}

OracleMemory OracleEvaluator::ConvertInput(const Ciphertext& c) {
  Memory one = TrivialOne();
  return Mul(c, one);
}

OracleMemory OracleEvaluator::Add(const Memory& a, const Memory& b) {
  CheckSigma(a);
  CheckSigma(b);
  return Reshare(a.plain + b.plain);
}

OracleMemory OracleEvaluator::Sub(const Memory& a, const Memory& b) {
  CheckSigma(a);
  CheckSigma(b);
  return Reshare(a.plain - b.plain);
}

OracleMemory OracleEvaluator::CMul(const BigInt& k, const Memory& a) {
  CheckSigma(a);
  return Reshare(k * a.plain);
}

OracleCiphertext OracleEvaluator::AddCt(const Ciphertext& a,
                                        const Ciphertext& b) const {
  return {Mod(a.x + b.x, key_.n)};
}

Share OracleEvaluator::Output(const Memory& m) const {
  CheckSigma(m);
  return {sigma_, Mod(m.x_share, key_.n)};
}

Share OracleEvaluator::Output(const Memory& m, const BigInt& n_out) const {
  if (n_out != key_.n) {
    Fail(ErrorCode::kUnsupportedModulus, "output modulus must equal N");
  }
  return Output(m);
}

}  // namespace hssdt
