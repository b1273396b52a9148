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

#ifndef HSSDT_HSS_DDLOG_H_
#define HSSDT_HSS_DDLOG_H_

#include "hssdt/common/bigint.h"

namespace hssdt {

// Distributed discrete log in the (1+N) subgroup. Writes the element as
// h0 + h1*N and returns h1 / h0 mod N, so that
//   Ddlog((1+N)^x * u) - Ddlog(u) = x (mod N)
// for every unit u. Throws kConversion when h0 is not a unit mod N.
BigInt Ddlog(const BigInt& elem, const BigInt& n);

}  // namespace hssdt

#endif  // HSSDT_HSS_DDLOG_H_
