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

#include "hssdt/hss/paillier_evaluator.h"

#include "hssdt/common/errors.h"
#include "hssdt/hss/ddlog.h"

namespace hssdt {

static_assert(RmsEvaluator<PaillierEvaluator>);

PaillierEvaluator::PaillierEvaluator(const PublicKey& pk, const EvalKey& ek,
                                     MetricsLedger* ledger)
    : pk_(pk), ek_(ek), ledger_(ledger) {
  if (ek.sigma > 1) Fail(ErrorCode::kProtocolMisuse, "sigma must be 0 or 1");
}

MemoryValue PaillierEvaluator::TrivialOne() const {
  return {ek_.sigma, BigInt(ek_.sigma), ek_.d_share};
}

MemoryValue PaillierEvaluator::Zero() const { return {ek_.sigma, 0, 0}; }

void PaillierEvaluator::CheckSigma(const Memory& m) const {
  if (m.sigma != ek_.sigma) {
    Fail(ErrorCode::kProtocolMisuse, "memory value belongs to the other server");
  }
}

BigInt PaillierEvaluator::Convert(const GroupPair& pair, const Memory& m) const {
  // c1^x * c0^(-dx): the h^(r*x) and g^(r*d*x) parts cancel across servers.
  const BigInt& n2 = pk_.n2;
  for (const BigInt* e : {&pair.c0, &pair.c1}) {
    if (sgn(*e) <= 0 || *e >= n2) {
      Fail(ErrorCode::kDecode, "group element out of range");
    }
  }
  BigInt a = PowMod(pair.c1, m.x_share, n2);
  BigInt b = PowMod(pair.c0, -m.dx_share, n2);
  BigInt e = a * b;
  mpz_mod(e.get_mpz_t(), e.get_mpz_t(), n2.get_mpz_t());
  return Ddlog(e, pk_.n);
}

MemoryValue PaillierEvaluator::Mul(const Ciphertext& c, const Memory& m) {
  CheckSigma(m);
  Memory out{ek_.sigma, Convert(c.main, m), Convert(c.companion, m)};
  ++gates_;
  if (ledger_ != nullptr) ledger_->RecordMul();
  return out;
}

MemoryValue PaillierEvaluator::ConvertInput(const Ciphertext& c) {
  return Mul(c, TrivialOne());
}

MemoryValue PaillierEvaluator::Add(const Memory& a, const Memory& b) const {
  CheckSigma(a);
  CheckSigma(b);
  return {ek_.sigma, a.x_share + b.x_share, a.dx_share + b.dx_share};
}

MemoryValue PaillierEvaluator::Sub(const Memory& a, const Memory& b) const {
  CheckSigma(a);
  CheckSigma(b);
  return {ek_.sigma, a.x_share - b.x_share, a.dx_share - b.dx_share};
}

MemoryValue PaillierEvaluator::CMul(const BigInt& k, const Memory& a) const {
  CheckSigma(a);
  return {ek_.sigma, k * a.x_share, k * a.dx_share};
}

Ciphertext PaillierEvaluator::AddCt(const Ciphertext& a,
                                    const Ciphertext& b) const {
  return AddCiphertexts(pk_, a, b);
}

Share PaillierEvaluator::Output(const Memory& m) const {
  CheckSigma(m);
  return {ek_.sigma, Mod(m.x_share, pk_.n)};
}

Share PaillierEvaluator::Output(const Memory& m, const BigInt& n_out) const {
  if (n_out != pk_.n) {
    Fail(ErrorCode::kUnsupportedModulus, "output modulus must equal N");
  }
  return Output(m);
}

}  // namespace hssdt
