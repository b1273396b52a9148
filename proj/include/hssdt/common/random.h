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

#ifndef HSSDT_COMMON_RANDOM_H_
#define HSSDT_COMMON_RANDOM_H_

#include <cstdint>
#include <memory>
#include <span>

#include "hssdt/common/bigint.h"

namespace hssdt {

// Source of random bytes plus the integer sampling helpers built on it.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void Fill(std::span<uint8_t> out) = 0;

  uint64_t NextU64();
  // Uniform in [0, bound); bound > 0.
  uint64_t UniformU64(uint64_t bound);
  // Uniform in [0, 2^bits).
  BigInt Bits(size_t bits);
  // Uniform in [0, bound) by rejection; bound > 0.
  BigInt Below(const BigInt& bound);
  // Uniform in [lo, hi).
  BigInt Range(const BigInt& lo, const BigInt& hi);
};

// OS-backed CSPRNG (OpenSSL RAND_bytes). Thread-safe.
class SystemRandom final : public RandomSource {
 public:
  void Fill(std::span<uint8_t> out) override;
};

// Deterministic AES-256-CTR stream keyed by SHA-256(seed). Not thread-safe;
// intended for reproducible tests and benchmarks.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(uint64_t seed);
  ~SeededRandom() override;
  SeededRandom(const SeededRandom&) = delete;
  SeededRandom& operator=(const SeededRandom&) = delete;

  void Fill(std::span<uint8_t> out) override;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace hssdt

#endif  // HSSDT_COMMON_RANDOM_H_
