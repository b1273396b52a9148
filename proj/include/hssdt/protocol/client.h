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

#ifndef HSSDT_PROTOCOL_CLIENT_H_
#define HSSDT_PROTOCOL_CLIENT_H_

#include <vector>

#include "hssdt/common/random.h"
#include "hssdt/hss/keys.h"
#include "hssdt/protocol/messages.h"
#include "hssdt/tree/plain_eval.h"

namespace hssdt {

// Row j, bit i: product of feature_map[j][s] over all s with bit i of x_s
// set, times a fresh encryption of zero. Decrypts to bit i of the feature
// selected by row j.
std::vector<BitCiphertexts> SelectFeatures(
    const Encryptor& enc, const std::vector<std::vector<Ciphertext>>& feature_map,
    const FeatureVector& x, uint32_t t, RandomSource& rng);

struct PreparedQuery {
  ClientQuery query;
  BigInt mac_key;  // A, kept by the client
};

// Throws kDomain if x does not fit the model's n and t.
PreparedQuery BuildQuery(const Encryptor& enc, const ClientModelView& view,
                         const FeatureVector& x, RandomSource& rng);

}  // namespace hssdt

#endif  // HSSDT_PROTOCOL_CLIENT_H_
