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

#include "hssdt/hss/fixed_base.h"

namespace hssdt {

FixedBaseTable::FixedBaseTable(const BigInt& base, const BigInt& modulus,
                               size_t max_exp_bits)
    : base_(base), modulus_(modulus), max_exp_bits_(max_exp_bits) {
  // Wider windows pay off until the table gets large.
  window_ = max_exp_bits <= 1100 ? 8 : 4;
  size_t windows = (max_exp_bits + window_ - 1) / window_;
  size_t digits = (size_t{1} << window_) - 1;
  rows_.resize(windows);
  BigInt cur = Mod(base, modulus);
  for (auto& row : rows_) {
    row.resize(digits);
    row[0] = cur;
    for (size_t j = 1; j < digits; ++j) {
      mpz_mul(row[j].get_mpz_t(), row[j - 1].get_mpz_t(), cur.get_mpz_t());
      mpz_mod(row[j].get_mpz_t(), row[j].get_mpz_t(), modulus_.get_mpz_t());
    }
    mpz_mul(cur.get_mpz_t(), row[digits - 1].get_mpz_t(), cur.get_mpz_t());
    mpz_mod(cur.get_mpz_t(), cur.get_mpz_t(), modulus_.get_mpz_t());
  }
}

BigInt FixedBaseTable::Pow(const BigInt& e) const {
  if (sgn(e) < 0 || mpz_sizeinbase(e.get_mpz_t(), 2) > max_exp_bits_) {
    return PowMod(base_, e, modulus_);
  }
  BigInt acc = 1;
  const mpz_srcptr ep = e.get_mpz_t();
  const size_t limbs = mpz_size(ep);
  const size_t per_limb = GMP_NUMB_BITS / window_;
  const mp_limb_t mask = (mp_limb_t{1} << window_) - 1;
  size_t row = 0;
  for (size_t l = 0; l < limbs; ++l) {
    mp_limb_t limb = mpz_getlimbn(ep, static_cast<mp_size_t>(l));
    for (size_t k = 0; k < per_limb && row < rows_.size(); ++k, ++row) {
      mp_limb_t digit = (limb >> (k * window_)) & mask;
      if (digit == 0) continue;
      mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), rows_[row][digit - 1].get_mpz_t());
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus_.get_mpz_t());
    }
  }
  return acc;
}

}  // namespace hssdt
