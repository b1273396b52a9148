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

#ifndef HSSDT_COMPARE_PLAIN_ORACLES_H_
#define HSSDT_COMPARE_PLAIN_ORACLES_H_

#include <cstdint>
#include <vector>

namespace hssdt {

struct PlainComparison {
  int bit = 0;
  std::vector<int> trace;  // state after each bit, LSB first
};

// Unoptimized bit recursion c' = a(1-b) + c(1-a-b+2ab), in the clear.
PlainComparison PlainCompareOracle(uint64_t alpha, uint64_t beta, uint32_t t);

// c' = (a == b) and c, in the clear.
int PlainEqualOracle(uint64_t alpha, uint64_t beta, uint32_t t);

}  // namespace hssdt

#endif  // HSSDT_COMPARE_PLAIN_ORACLES_H_
