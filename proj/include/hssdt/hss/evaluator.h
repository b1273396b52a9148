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

#ifndef HSSDT_HSS_EVALUATOR_H_
#define HSSDT_HSS_EVALUATOR_H_

#include <concepts>
#include <cstdint>

#include "hssdt/common/bigint.h"

namespace hssdt {

// A server's view of an intermediate value x: subtractive shares of x and
// d*x. Shares are kept as plain integers (no reduction) so that differences
// stay exact through Add/Sub/CMul; Output reduces.
struct MemoryValue {
  uint8_t sigma = 0;
  BigInt x_share;
  BigInt dx_share;
};

struct Share {
  uint8_t sigma = 0;
  BigInt value;
  bool operator==(const Share&) const = default;
};

// One server's instruction set for straight-line RMS programs. Algorithms
// are written once against this and run on either backend.
template <typename E>
concept RmsEvaluator = requires(E& e, const typename E::Ciphertext& c,
                                const typename E::Memory& m, const BigInt& k) {
  { e.sigma() } -> std::convertible_to<uint8_t>;
  { e.modulus() } -> std::convertible_to<BigInt>;
  { e.TrivialOne() } -> std::same_as<typename E::Memory>;
  { e.Zero() } -> std::same_as<typename E::Memory>;
  { e.ConvertInput(c) } -> std::same_as<typename E::Memory>;
  { e.Mul(c, m) } -> std::same_as<typename E::Memory>;
  { e.Add(m, m) } -> std::same_as<typename E::Memory>;
  { e.Sub(m, m) } -> std::same_as<typename E::Memory>;
  { e.CMul(k, m) } -> std::same_as<typename E::Memory>;
  { e.AddCt(c, c) } -> std::same_as<typename E::Ciphertext>;
  { e.Output(m) } -> std::same_as<Share>;
  { e.gates() } -> std::convertible_to<uint64_t>;
};

// Reconstructs a value from the two servers' shares as a residue mod n.
inline BigInt Reconstruct(const Share& s0, const Share& s1, const BigInt& n) {
  return Mod(s1.value - s0.value, n);
}

}  // namespace hssdt

#endif  // HSSDT_HSS_EVALUATOR_H_
