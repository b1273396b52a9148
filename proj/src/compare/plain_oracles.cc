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

#include "hssdt/compare/plain_oracles.h"

#include "hssdt/common/errors.h"

namespace hssdt {

PlainComparison PlainCompareOracle(uint64_t alpha, uint64_t beta, uint32_t t) {
  if (t == 0 || t > 63) Fail(ErrorCode::kDomain, "bad width");
  PlainComparison out;
  int c = 0;
  for (uint32_t i = 0; i < t; ++i) {
    int a = (alpha >> i) & 1, b = (beta >> i) & 1;
    if (i == 0) {
      c = a * (1 - b);
    } else {
      c = a * (1 - b) + c * (1 - a - b + 2 * a * b);
    }
    out.trace.push_back(c);
  }
  out.bit = c;
  return out;
}

int PlainEqualOracle(uint64_t alpha, uint64_t beta, uint32_t t) {
  if (t == 0 || t > 63) Fail(ErrorCode::kDomain, "bad width");
  int c = 1;
  for (uint32_t i = 0; i < t; ++i) {
    c = c && (((alpha >> i) & 1) == ((beta >> i) & 1));
  }
  return c;
}

}  // namespace hssdt
