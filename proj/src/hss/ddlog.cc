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

#include "hssdt/hss/ddlog.h"

#include "hssdt/common/errors.h"

namespace hssdt {

BigInt Ddlog(const BigInt& elem, const BigInt& n) {
  BigInt h0, h1;
  mpz_fdiv_qr(h1.get_mpz_t(), h0.get_mpz_t(), elem.get_mpz_t(), n.get_mpz_t());
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), h0.get_mpz_t(), n.get_mpz_t()) == 0) {
    Fail(ErrorCode::kConversion, "share conversion hit a non-unit (bad modulus?)");
  }
  BigInt out = h1 * inv;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
  return out;
}

}  // namespace hssdt
