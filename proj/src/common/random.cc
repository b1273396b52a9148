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

#include "hssdt/common/random.h"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <array>
#include <cstring>
#include <vector>

#include "hssdt/common/errors.h"
#include "hssdt/common/hash.h"

namespace hssdt {

uint64_t RandomSource::NextU64() {
  std::array<uint8_t, 8> buf;
  Fill(buf);
  uint64_t v = 0;
  for (uint8_t b : buf) v = (v << 8) | b;
  return v;
}

uint64_t RandomSource::UniformU64(uint64_t bound) {
  if (bound == 0) Fail(ErrorCode::kDomain, "UniformU64 with zero bound");
  // Largest multiple of bound that fits, for rejection.
  uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  while (true) {
    uint64_t v = NextU64();
    if (v < limit) return v % bound;
  }
}

BigInt RandomSource::Bits(size_t bits) {
  if (bits == 0) return 0;
  std::vector<uint8_t> buf(ByteWidth(bits));
  Fill(buf);
  size_t excess = buf.size() * 8 - bits;
  buf[0] &= static_cast<uint8_t>(0xFF >> excess);
  return FromBytes(buf);
}

BigInt RandomSource::Below(const BigInt& bound) {
  if (sgn(bound) <= 0) Fail(ErrorCode::kDomain, "Below with non-positive bound");
  size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  while (true) {
    BigInt v = Bits(bits);
    if (v < bound) return v;
  }
}

BigInt RandomSource::Range(const BigInt& lo, const BigInt& hi) {
  if (hi <= lo) Fail(ErrorCode::kDomain, "empty random range");
  return lo + Below(hi - lo);
}

void SystemRandom::Fill(std::span<uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    Fail(ErrorCode::kSetupFailure, "system randomness unavailable");
  }
}

struct SeededRandom::State {
  EVP_CIPHER_CTX* ctx = nullptr;
};

SeededRandom::SeededRandom(uint64_t seed) : state_(std::make_unique<State>()) {
  std::array<uint8_t, 8> seed_bytes;
  for (int i = 0; i < 8; ++i) seed_bytes[i] = static_cast<uint8_t>(seed >> (56 - 8 * i));
  Digest key = Sha256(seed_bytes);
  std::array<uint8_t, 16> iv{};
  state_->ctx = EVP_CIPHER_CTX_new();
  if (state_->ctx == nullptr ||
      EVP_EncryptInit_ex(state_->ctx, EVP_aes_256_ctr(), nullptr, key.data(),
                         iv.data()) != 1) {
    Fail(ErrorCode::kSetupFailure, "cannot initialise seeded stream");
  }
}

SeededRandom::~SeededRandom() {
  if (state_ && state_->ctx) EVP_CIPHER_CTX_free(state_->ctx);
}

void SeededRandom::Fill(std::span<uint8_t> out) {
  if (out.empty()) return;
  std::memset(out.data(), 0, out.size());
  int len = 0;
  if (EVP_EncryptUpdate(state_->ctx, out.data(), &len, out.data(),
                        static_cast<int>(out.size())) != 1) {
    Fail(ErrorCode::kSetupFailure, "seeded stream failure");
  }
}

}  // namespace hssdt
