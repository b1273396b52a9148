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

#include "hssdt/common/bigint.h"

#include <limits>

#include "hssdt/common/errors.h"

namespace hssdt {

void AppendFixedBytes(std::vector<uint8_t>& out, const BigInt& value,
                      size_t width) {
  if (sgn(value) < 0) {
    Fail(ErrorCode::kDomain, "cannot encode a negative integer");
  }
  size_t needed = sgn(value) == 0 ? 0 : ByteWidth(mpz_sizeinbase(value.get_mpz_t(), 2));
  if (needed > width) {
    Fail(ErrorCode::kDomain, "integer needs " + std::to_string(needed) +
                                 " bytes but field is " + std::to_string(width));
  }
  size_t offset = out.size();
  out.resize(offset + width, 0);
  if (needed == 0) return;
  size_t written = 0;
  mpz_export(out.data() + offset + (width - needed), &written, 1, 1, 1, 0,
             value.get_mpz_t());
}

std::vector<uint8_t> ToFixedBytes(const BigInt& value, size_t width) {
  std::vector<uint8_t> out;
  out.reserve(width);
  AppendFixedBytes(out, value, width);
  return out;
}

BigInt FromBytes(std::span<const uint8_t> bytes) {
  BigInt v;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

BigInt Mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt CenteredLift(const BigInt& a, const BigInt& m) {
  BigInt r = Mod(a, m);
  BigInt half = m / 2;
  if (r > half) r -= m;
  return r;
}

BigInt ModInverse(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    Fail(ErrorCode::kConversion, "element is not invertible");
  }
  return r;
}

BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& m) {
  BigInt r;
  if (sgn(exp) < 0) {
    BigInt inv = ModInverse(base, m);
    BigInt e = -exp;
    mpz_powm(r.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  } else {
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

BigInt FromInt64(int64_t v) {
  if (v >= 0) return FromUint64(static_cast<uint64_t>(v));
  // Avoid overflow on INT64_MIN.
  BigInt mag = FromUint64(static_cast<uint64_t>(-(v + 1)) + 1);
  return -mag;
}

BigInt FromUint64(uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

int64_t ToInt64(const BigInt& v) {
  static const BigInt kMax = FromInt64(std::numeric_limits<int64_t>::max());
  static const BigInt kMin = FromInt64(std::numeric_limits<int64_t>::min());
  if (v > kMax || v < kMin) {
    Fail(ErrorCode::kDomain, "integer does not fit in 64 bits");
  }
  BigInt mag = abs(v);
  uint64_t u = 0;
  size_t count = 0;
  mpz_export(&u, &count, 1, sizeof(u), 0, 0, mag.get_mpz_t());
  if (sgn(v) < 0) return static_cast<int64_t>(~u + 1);
  return static_cast<int64_t>(u);
}

std::string ToHex(const BigInt& v) { return v.get_str(16); }

}  // namespace hssdt
