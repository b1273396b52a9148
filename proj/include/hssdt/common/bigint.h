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

#ifndef HSSDT_COMMON_BIGINT_H_
#define HSSDT_COMMON_BIGINT_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hssdt {

using BigInt = mpz_class;

// Number of bytes needed for a `bits`-bit unsigned quantity.
constexpr size_t ByteWidth(size_t bits) { return (bits + 7) / 8; }

// Big-endian encoding left-padded to exactly `width` bytes. The value must be
// non-negative and fit.
std::vector<uint8_t> ToFixedBytes(const BigInt& value, size_t width);
void AppendFixedBytes(std::vector<uint8_t>& out, const BigInt& value,
                      size_t width);
BigInt FromBytes(std::span<const uint8_t> bytes);

// Least non-negative residue.
BigInt Mod(const BigInt& a, const BigInt& m);

// Representative of a mod m in (-m/2, m/2].
BigInt CenteredLift(const BigInt& a, const BigInt& m);

// Throws kConversion when a is not a unit mod m.
BigInt ModInverse(const BigInt& a, const BigInt& m);

// base^exp mod m; a negative exponent inverts the base first.
BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& m);

BigInt FromInt64(int64_t v);
BigInt FromUint64(uint64_t v);

// Throws kDomain if the value does not fit.
int64_t ToInt64(const BigInt& v);

std::string ToHex(const BigInt& v);

}  // namespace hssdt

#endif  // HSSDT_COMMON_BIGINT_H_
