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

#ifndef HSSDT_HSS_FIXED_BASE_H_
#define HSSDT_HSS_FIXED_BASE_H_

#include <cstddef>
#include <vector>

#include "hssdt/common/bigint.h"

namespace hssdt {

// Windowed precomputation for repeated exponentiation of one base. Holds
// base^(j * 2^(w*i)) for every window i and digit j, so an exponent of
// max_exp_bits costs at most max_exp_bits/w modular multiplications.
class FixedBaseTable {
 public:
  FixedBaseTable() = default;
  FixedBaseTable(const BigInt& base, const BigInt& modulus, size_t max_exp_bits);

  // base^e mod modulus. Falls back to PowMod for negative or oversize e.
  BigInt Pow(const BigInt& e) const;

  bool empty() const { return rows_.empty(); }

 private:
  BigInt base_;
  BigInt modulus_;
  size_t window_ = 4;
  size_t max_exp_bits_ = 0;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace hssdt

#endif  // HSSDT_HSS_FIXED_BASE_H_
