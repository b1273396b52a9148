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

#include "hssdt/protocol/reconstruct.h"

#include <utility>

namespace hssdt {

const char* RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNone:
      return "none";
    case RejectReason::kMalformed:
      return "malformed-response";
    case RejectReason::kNoZeroPathCost:
      return "no-zero-path-cost";
    case RejectReason::kAmbiguous:
      return "ambiguous-path-cost";
    case RejectReason::kMacMismatch:
      return "mac-mismatch";
  }
  return "unknown";
}

namespace {

Outcome Reject(RejectReason reason, size_t tree = 0) {
  Outcome o;
  o.reason = reason;
  o.tree = tree;
  return o;
}

// Orders the pair by sigma and checks they describe the same evaluation.
bool Pair(const ServerResponse& a, const ServerResponse& b, EvalMode mode,
          const ServerResponse** r0, const ServerResponse** r1) {
  if (a.sigma > 1 || b.sigma > 1 || a.sigma == b.sigma) return false;
  if (a.mode != mode || b.mode != mode) return false;
  if (a.trees.size() != b.trees.size() || a.trees.empty()) return false;
  if (mode != EvalMode::kGbdt && a.trees.size() != 1) return false;
  for (size_t j = 0; j < a.trees.size(); ++j) {
    if (a.trees[j].size() != b.trees[j].size() || a.trees[j].empty()) return false;
  }
  *r0 = a.sigma == 0 ? &a : &b;
  *r1 = a.sigma == 0 ? &b : &a;
  return true;
}

BigInt Diff(const BigInt& s0, const BigInt& s1, const BigInt& n) { return Mod(s1 - s0, n); }

// Index of the unique zero path cost in tree j, or a rejection.
std::pair<size_t, RejectReason> Selected(const ServerResponse& r0,
                                         const ServerResponse& r1, size_t j,
                                         const BigInt& n) {
  size_t found = 0, count = 0;
  for (size_t i = 0; i < r0.trees[j].size(); ++i) {
    if (sgn(Diff(r0.trees[j][i].pc, r1.trees[j][i].pc, n)) == 0) {
      found = i;
      ++count;
    }
  }
  if (count == 0) return {0, RejectReason::kNoZeroPathCost};
  if (count > 1) return {0, RejectReason::kAmbiguous};
  return {found, RejectReason::kNone};
}

Outcome SingleTree(const BigInt& n, const BigInt* mac_key, const ServerResponse& a,
                   const ServerResponse& b, EvalMode mode) {
  const ServerResponse *r0, *r1;
  if (!Pair(a, b, mode, &r0, &r1)) return Reject(RejectReason::kMalformed);
  auto [i, reason] = Selected(*r0, *r1, 0, n);
  if (reason != RejectReason::kNone) return Reject(reason);
  const LeafShares& s0 = r0->trees[0][i];
  const LeafShares& s1 = r1->trees[0][i];
  BigInt v = Diff(s0.value, s1.value, n);
  if (mac_key) {
    BigInt w = Diff(s0.proof, s1.proof, n);
    if (Mod(*mac_key * v, n) != w) return Reject(RejectReason::kMacMismatch);
  }
  Outcome o;
  o.accepted = true;
  o.value = CenteredLift(v, n);
  return o;
}

}  // namespace

Outcome Reconstruct(const BigInt& n, const ServerResponse& a, const ServerResponse& b) {
  return SingleTree(n, nullptr, a, b, EvalMode::kPlain);
}

Outcome Verify(const BigInt& n, const BigInt& mac_key, const ServerResponse& a,
               const ServerResponse& b) {
  return SingleTree(n, &mac_key, a, b, EvalMode::kVerifiable);
}

Outcome ReconstructGbdt(const BigInt& n, const BigInt& mac_key, const ServerResponse& a,
                        const ServerResponse& b) {
  const ServerResponse *r0, *r1;
  if (!Pair(a, b, EvalMode::kGbdt, &r0, &r1)) return Reject(RejectReason::kMalformed);
  BigInt total = Diff(r0->t0, r1->t0, n);
  BigInt proof = Diff(r0->t0_proof, r1->t0_proof, n);
  for (size_t j = 0; j < r0->trees.size(); ++j) {
    auto [i, reason] = Selected(*r0, *r1, j, n);
    if (reason != RejectReason::kNone) return Reject(reason, j);
    total += Diff(r0->trees[j][i].value, r1->trees[j][i].value, n);
    proof += Diff(r0->trees[j][i].proof, r1->trees[j][i].proof, n);
  }
  total = Mod(total, n);
  if (Mod(mac_key * total, n) != Mod(proof, n)) return Reject(RejectReason::kMacMismatch);
  Outcome o;
  o.accepted = true;
  o.value = CenteredLift(total, n);
  return o;
}

Outcome Finish(const BigInt& n, const BigInt& mac_key, const ServerResponse& a,
               const ServerResponse& b) {
  switch (a.mode) {
    case EvalMode::kPlain:
      return Reconstruct(n, a, b);
    case EvalMode::kVerifiable:
      return Verify(n, mac_key, a, b);
    case EvalMode::kGbdt:
      return ReconstructGbdt(n, mac_key, a, b);
  }
  return Reject(RejectReason::kMalformed);
}

}  // namespace hssdt
