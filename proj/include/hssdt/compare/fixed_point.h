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

#ifndef HSSDT_COMPARE_FIXED_POINT_H_
#define HSSDT_COMPARE_FIXED_POINT_H_

#include <cstdint>
#include <vector>

#include "hssdt/common/bigint.h"

namespace hssdt {

struct FixedPointSpec {
  uint32_t total_bits = 10;  // t
  uint32_t frac_bits = 0;    // f

  // Throws kDomain unless 1 <= t <= 32 and f < t.
  void Validate() const;
  double scale() const;
};

// round-half-even(value * 2^f) + 2^(t-1). Order preserving; throws kDomain
// if the result leaves [0, 2^t).
uint64_t ScaleFixed(double value, const FixedPointSpec& spec);

// round-half-even(value * 2^frac_bits), no offset. Throws kDomain if the
// result does not fit in 62 bits.
int64_t ScaleSigned(double value, uint32_t frac_bits);
double Descale(const BigInt& value, uint32_t frac_bits);

// LSB-first bits of v; throws kDomain if v >= 2^t.
std::vector<uint8_t> BitDecompose(uint64_t v, uint32_t t);

}  // namespace hssdt

#endif  // HSSDT_COMPARE_FIXED_POINT_H_
