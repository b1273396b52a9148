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

#include "hssdt/compare/fixed_point.h"

#include <cmath>

#include "hssdt/common/errors.h"

namespace hssdt {

void FixedPointSpec::Validate() const {
  if (total_bits < 1 || total_bits > 32) {
    Fail(ErrorCode::kDomain, "bit width t must be in [1, 32]");
  }
  if (frac_bits >= total_bits) {
    Fail(ErrorCode::kDomain, "fraction bits must be below t");
  }
}

double FixedPointSpec::scale() const { return std::ldexp(1.0, static_cast<int>(frac_bits)); }

uint64_t ScaleFixed(double value, const FixedPointSpec& spec) {
  spec.Validate();
  if (!std::isfinite(value)) Fail(ErrorCode::kDomain, "value is not finite");
  // nearbyint follows the current rounding mode, which is to-nearest-even.
  double scaled = std::nearbyint(std::ldexp(value, static_cast<int>(spec.frac_bits)));
  double offset = std::ldexp(1.0, static_cast<int>(spec.total_bits) - 1);
  double encoded = scaled + offset;
  if (encoded < 0 || encoded >= 2 * offset) {
    Fail(ErrorCode::kDomain, "value " + std::to_string(value) + " overflows " +
                                 std::to_string(spec.total_bits) + " bits");
  }
  return static_cast<uint64_t>(encoded);
}

int64_t ScaleSigned(double value, uint32_t frac_bits) {
  if (!std::isfinite(value)) Fail(ErrorCode::kDomain, "value is not finite");
  double scaled = std::nearbyint(std::ldexp(value, static_cast<int>(frac_bits)));
  if (std::fabs(scaled) >= std::ldexp(1.0, 62)) {
    Fail(ErrorCode::kDomain, "fixed-point value too large");
  }
  return static_cast<int64_t>(scaled);
}

double Descale(const BigInt& value, uint32_t frac_bits) {
  return std::ldexp(value.get_d(), -static_cast<int>(frac_bits));
}

std::vector<uint8_t> BitDecompose(uint64_t v, uint32_t t) {
  if (t < 64 && (v >> t) != 0) {
    Fail(ErrorCode::kDomain, std::to_string(v) + " does not fit in " +
                                 std::to_string(t) + " bits");
  }
  std::vector<uint8_t> bits(t);
  for (uint32_t i = 0; i < t; ++i) bits[i] = (v >> i) & 1;
  return bits;
}

}  // namespace hssdt
