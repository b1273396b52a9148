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

#ifndef HSSDT_PROTOCOL_MASK_PLAN_H_
#define HSSDT_PROTOCOL_MASK_PLAN_H_

#include <vector>

#include "hssdt/common/bigint.h"
#include "hssdt/hss/keys.h"
#include "hssdt/protocol/messages.h"

namespace hssdt {

struct TreeMasks {
  std::vector<BigInt> pc_masks;     // k units mod N
  std::vector<BigInt> label_masks;  // k values mod N
  std::vector<uint32_t> perm;       // output slot i holds leaf perm[i]
  bool operator==(const TreeMasks&) const = default;
};

// Per-query randomness both servers derive locally from the shared PRF key
// and the client's nonce, with no communication.
struct MaskPlan {
  std::vector<TreeMasks> trees;
  // Ensembles: entry 0 masks the bias, entry j masks tree j. Each column
  // sums to 0 mod N.
  std::vector<BigInt> value_masks;
  std::vector<BigInt> proof_masks;
  bool operator==(const MaskPlan&) const = default;
};

MaskPlan DeriveMaskPlan(const EvalKey& ek, const BigInt& n,
                        const std::vector<size_t>& leaves_per_tree,
                        const QueryNonce& nonce, bool ensemble);

}  // namespace hssdt

#endif  // HSSDT_PROTOCOL_MASK_PLAN_H_
