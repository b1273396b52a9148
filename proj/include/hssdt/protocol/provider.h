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

#ifndef HSSDT_PROTOCOL_PROVIDER_H_
#define HSSDT_PROTOCOL_PROVIDER_H_

#include "hssdt/common/random.h"
#include "hssdt/hss/keys.h"
#include "hssdt/protocol/messages.h"
#include "hssdt/tree/decision_tree.h"
#include "hssdt/tree/gbdt.h"

namespace hssdt {

// Threshold bits, member-set bits, labels and the one-hot feature map, all
// under fresh randomness. Throws kDomain on invalid trees or on labels too
// large for exact evaluation.
EncryptedModel EncryptTree(const Encryptor& enc, const CompleteTree& tree,
                           RandomSource& rng);
EncryptedModel EncryptGbdt(const Encryptor& enc, const GbdtModel& model,
                           RandomSource& rng);

}  // namespace hssdt

#endif  // HSSDT_PROTOCOL_PROVIDER_H_
