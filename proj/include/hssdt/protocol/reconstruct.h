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

#ifndef HSSDT_PROTOCOL_RECONSTRUCT_H_
#define HSSDT_PROTOCOL_RECONSTRUCT_H_

#include <cstddef>
#include <string>

#include "hssdt/common/bigint.h"
#include "hssdt/protocol/messages.h"

namespace hssdt {

enum class RejectReason : uint8_t {
  kNone = 0,
  kMalformed,       // responses disagree on shape, mode or sigma
  kNoZeroPathCost,  // some tree has no selected leaf
  kAmbiguous,       // some tree has more than one selected leaf
  kMacMismatch,     // proof does not equal A times the value
};

const char* RejectReasonName(RejectReason reason);

struct Outcome {
  bool accepted = false;
  RejectReason reason = RejectReason::kNone;
  // Centered lift of the reconstructed label (trees) or aggregate
  // (ensembles, scale 2^(2f)).
  BigInt value;
  size_t tree = 0;  // tree that triggered a path-cost rejection
};

// Order of the two responses does not matter.
Outcome Reconstruct(const BigInt& n, const ServerResponse& a, const ServerResponse& b);
Outcome Verify(const BigInt& n, const BigInt& mac_key, const ServerResponse& a,
               const ServerResponse& b);
Outcome ReconstructGbdt(const BigInt& n, const BigInt& mac_key,
                        const ServerResponse& a, const ServerResponse& b);

// Dispatches on the responses' mode.
Outcome Finish(const BigInt& n, const BigInt& mac_key, const ServerResponse& a,
               const ServerResponse& b);

}  // namespace hssdt

#endif  // HSSDT_PROTOCOL_RECONSTRUCT_H_
