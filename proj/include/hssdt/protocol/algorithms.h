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

#ifndef HSSDT_PROTOCOL_ALGORITHMS_H_
#define HSSDT_PROTOCOL_ALGORITHMS_H_

#include <span>
#include <vector>

#include "hssdt/common/errors.h"
#include "hssdt/compare/comparison.h"
#include "hssdt/hss/evaluator.h"
#include "hssdt/protocol/mask_plan.h"
#include "hssdt/protocol/messages.h"
#include "hssdt/tree/decision_tree.h"

// Server-side evaluation steps, generic over the RMS backend so the same
// code runs on Paillier ciphertexts and on the plaintext oracle.
namespace hssdt {

// Encrypted shape of one decision node as seen by the evaluator.
template <typename Ct>
struct NodeInputs {
  TestKind kind = TestKind::kThreshold;
  std::span<const Ct> selected;                  // x_delta bits
  std::span<const Ct> threshold;                 // threshold nodes
  const std::vector<std::vector<Ct>>* member_set = nullptr;  // member nodes
};

template <RmsEvaluator E>
std::vector<typename E::Memory> DecisionBits(
    E& ev, const std::vector<NodeInputs<typename E::Ciphertext>>& nodes) {
  std::vector<typename E::Memory> b;
  b.reserve(nodes.size());
  for (const auto& node : nodes) {
    if (node.kind == TestKind::kThreshold) {
      b.push_back(SecureGreaterThan(ev, node.selected, node.threshold));
    } else {
      b.push_back(SecureSetMember(ev, node.selected, *node.member_set));
    }
  }
  return b;
}

// Path cost memories for all 2^h leaves in heap order. Linear only.
template <RmsEvaluator E>
std::vector<typename E::Memory> PathCosts(E& ev, uint32_t h,
                                          const std::vector<typename E::Memory>& b) {
  size_t m = (size_t{1} << h) - 1;
  if (b.size() != m) Fail(ErrorCode::kProtocol, "decision count does not match height");
  const auto one = ev.TrivialOne();
  std::vector<typename E::Memory> cost(2 * m + 1, ev.Zero());
  for (size_t j = 0; j < m; ++j) {
    cost[2 * j + 1] = ev.Add(cost[j], ev.Sub(one, b[j]));  // left edge
    cost[2 * j + 2] = ev.Add(cost[j], b[j]);               // right edge
  }
  return {cost.begin() + static_cast<std::ptrdiff_t>(m), cost.end()};
}

namespace internal {

template <typename T>
std::vector<T> ApplyPerm(std::vector<T> in, const std::vector<uint32_t>& perm) {
  if (perm.size() != in.size()) Fail(ErrorCode::kProtocol, "permutation size mismatch");
  std::vector<T> out;
  out.reserve(in.size());
  for (uint32_t src : perm) out.push_back(std::move(in[src]));
  return out;
}

// Masked path costs and masked labels, before output.
template <RmsEvaluator E>
void MaskLeaves(E& ev, uint32_t h, const std::vector<typename E::Memory>& b,
                std::span<const typename E::Ciphertext> labels, const TreeMasks& masks,
                std::vector<typename E::Memory>* pc_out,
                std::vector<typename E::Memory>* v_out) {
  auto pc = PathCosts(ev, h, b);
  if (labels.size() != pc.size() || masks.pc_masks.size() != pc.size() ||
      masks.label_masks.size() != pc.size()) {
    Fail(ErrorCode::kProtocol, "leaf count mismatch");
  }
  for (size_t i = 0; i < pc.size(); ++i) {
    pc_out->push_back(ev.CMul(masks.pc_masks[i], pc[i]));
    v_out->push_back(ev.Add(ev.ConvertInput(labels[i]), ev.CMul(masks.label_masks[i], pc[i])));
  }
}

}  // namespace internal

// Selection: per leaf the shares of r0*pc and label + r1*pc, permuted.
template <RmsEvaluator E>
std::vector<LeafShares> SelectLeaves(E& ev, uint32_t h,
                                     const std::vector<typename E::Memory>& b,
                                     std::span<const typename E::Ciphertext> labels,
                                     const TreeMasks& masks) {
  std::vector<typename E::Memory> pc, v;
  internal::MaskLeaves(ev, h, b, labels, masks, &pc, &v);
  std::vector<LeafShares> out;
  for (size_t i = 0; i < pc.size(); ++i) {
    out.push_back({ev.Output(pc[i]).value, ev.Output(v[i]).value, BigInt(0)});
  }
  return internal::ApplyPerm(std::move(out), masks.perm);
}

// Selection plus a proof share A*(label + r1*pc) per leaf.
template <RmsEvaluator E>
std::vector<LeafShares> SelectLeavesVerifiable(E& ev, uint32_t h,
                                               const std::vector<typename E::Memory>& b,
                                               std::span<const typename E::Ciphertext> labels,
                                               const typename E::Ciphertext& mac_key,
                                               const TreeMasks& masks) {
  std::vector<typename E::Memory> pc, v;
  internal::MaskLeaves(ev, h, b, labels, masks, &pc, &v);
  std::vector<LeafShares> out;
  for (size_t i = 0; i < pc.size(); ++i) {
    auto w = ev.Mul(mac_key, v[i]);
    out.push_back({ev.Output(pc[i]).value, ev.Output(v[i]).value, ev.Output(w).value});
  }
  return internal::ApplyPerm(std::move(out), masks.perm);
}

// Ensemble tree j (1-based): value = eta*(label + r1*pc), proof = A*value,
// both offset by the zero-sum masks on server 1 only.
template <RmsEvaluator E>
std::vector<LeafShares> SelectLeavesEnsemble(E& ev, uint32_t h,
                                             const std::vector<typename E::Memory>& b,
                                             std::span<const typename E::Ciphertext> labels,
                                             const typename E::Ciphertext& eta,
                                             const typename E::Ciphertext& mac_key,
                                             const TreeMasks& masks,
                                             const BigInt& value_mask,
                                             const BigInt& proof_mask) {
  std::vector<typename E::Memory> pc, v;
  internal::MaskLeaves(ev, h, b, labels, masks, &pc, &v);
  const BigInt& n = ev.modulus();
  bool offset = ev.sigma() == 1;
  std::vector<LeafShares> out;
  for (size_t i = 0; i < pc.size(); ++i) {
    auto mu = ev.Mul(eta, v[i]);
    auto tau = ev.Mul(mac_key, mu);
    BigInt mu_share = ev.Output(mu).value;
    BigInt tau_share = ev.Output(tau).value;
    if (offset) {
      mu_share = Mod(mu_share + value_mask, n);
      tau_share = Mod(tau_share + proof_mask, n);
    }
    out.push_back({ev.Output(pc[i]).value, mu_share, tau_share});
  }
  return internal::ApplyPerm(std::move(out), masks.perm);
}

// Ensemble bias: shares of T0 and A*T0, masked like the trees.
template <RmsEvaluator E>
std::pair<BigInt, BigInt> EnsembleBias(E& ev, const typename E::Ciphertext& t0,
                                       const typename E::Ciphertext& mac_key,
                                       const BigInt& value_mask,
                                       const BigInt& proof_mask) {
  auto m = ev.ConvertInput(t0);
  auto proof = ev.Mul(mac_key, m);
  BigInt v = ev.Output(m).value;
  BigInt p = ev.Output(proof).value;
  if (ev.sigma() == 1) {
    v = Mod(v + value_mask, ev.modulus());
    p = Mod(p + proof_mask, ev.modulus());
  }
  return {v, p};
}

}  // namespace hssdt

#endif  // HSSDT_PROTOCOL_ALGORITHMS_H_
