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

#ifndef HSSDT_COMPARE_COMPARISON_H_
#define HSSDT_COMPARE_COMPARISON_H_

#include <span>
#include <vector>

#include "hssdt/common/errors.h"
#include "hssdt/hss/evaluator.h"

namespace hssdt {

namespace internal {

template <typename Ct>
void CheckWidths(std::span<const Ct> a, std::span<const Ct> b) {
  if (a.empty()) Fail(ErrorCode::kDomain, "comparison width must be positive");
  if (a.size() != b.size()) {
    Fail(ErrorCode::kDomain, "comparison operands have different widths (" +
                                 std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()) + ")");
  }
}

}  // namespace internal

// Secure greater-than on LSB-first bit ciphertexts. Opens to 1 iff
// alpha > beta. Uses exactly 4t-2 multiplication gates. If `trace` is
// given it receives the running state after each bit.
template <RmsEvaluator E>
typename E::Memory SecureGreaterThan(E& ev,
                                     std::span<const typename E::Ciphertext> alpha,
                                     std::span<const typename E::Ciphertext> beta,
                                     std::vector<typename E::Memory>* trace = nullptr) {
  internal::CheckWidths(alpha, beta);
  const auto one = ev.TrivialOne();
  // c = a1 - a1*b1
  auto ma = ev.ConvertInput(alpha[0]);
  auto c = ev.Sub(ma, ev.Mul(beta[0], ma));
  if (trace) trace->push_back(c);
  for (size_t i = 1; i < alpha.size(); ++i) {
    // c' = c - (a+b)c + ab(2c-1) + a
    auto ma_next = ev.ConvertInput(alpha[i]);
    auto sum = ev.AddCt(alpha[i], beta[i]);
    auto next = ev.Sub(c, ev.Mul(sum, c));
    auto two_c_minus_one = ev.Sub(ev.Add(c, c), one);
    auto prod = ev.Mul(beta[i], ev.Mul(alpha[i], two_c_minus_one));
    c = ev.Add(ev.Add(next, prod), ma_next);
    if (trace) trace->push_back(c);
  }
  return c;
}

// Secure equality on LSB-first bit ciphertexts; 3t multiplication gates.
template <RmsEvaluator E>
typename E::Memory SecureEqual(E& ev, std::span<const typename E::Ciphertext> alpha,
                               std::span<const typename E::Ciphertext> beta,
                               std::vector<typename E::Memory>* trace = nullptr) {
  internal::CheckWidths(alpha, beta);
  const auto one = ev.TrivialOne();
  // c = 1 - a1 - b1 + 2 a1 b1
  auto ma = ev.ConvertInput(alpha[0]);
  auto mb = ev.ConvertInput(beta[0]);
  auto c = ev.Mul(beta[0], ma);
  c = ev.Add(c, c);
  c = ev.Sub(c, ma);
  c = ev.Sub(c, mb);
  c = ev.Add(c, one);
  if (trace) trace->push_back(c);
  for (size_t i = 1; i < alpha.size(); ++i) {
    // c' = c - (a+b)c + 2abc
    auto sum = ev.AddCt(alpha[i], beta[i]);
    auto next = ev.Sub(c, ev.Mul(sum, c));
    auto prod = ev.Mul(beta[i], ev.Mul(alpha[i], ev.Add(c, c)));
    c = ev.Add(next, prod);
    if (trace) trace->push_back(c);
  }
  return c;
}

// Opens to 1 iff x equals one of the (pairwise distinct) elements. The
// empty set gives a constant 0.
template <RmsEvaluator E>
typename E::Memory SecureSetMember(
    E& ev, std::span<const typename E::Ciphertext> x,
    const std::vector<std::vector<typename E::Ciphertext>>& elements) {
  auto acc = ev.Zero();
  for (const auto& s : elements) {
    acc = ev.Add(acc, SecureEqual(ev, x, std::span<const typename E::Ciphertext>(s)));
  }
  return acc;
}

}  // namespace hssdt

#endif  // HSSDT_COMPARE_COMPARISON_H_
