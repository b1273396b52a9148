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

#include "hssdt/protocol/client.h"

#include "hssdt/common/errors.h"

namespace hssdt {

std::vector<BitCiphertexts> SelectFeatures(
    const Encryptor& enc, const std::vector<std::vector<Ciphertext>>& feature_map,
    const FeatureVector& x, uint32_t t, RandomSource& rng) {
  const PublicKey& pk = enc.pk();
  const Ciphertext identity{{1, 1}, {1, 1}};
  std::vector<BitCiphertexts> out;
  out.reserve(feature_map.size());
  for (const auto& row : feature_map) {
    if (row.size() != x.size()) Fail(ErrorCode::kDomain, "feature map width mismatch");
    BitCiphertexts bits;
    bits.reserve(t);
    for (uint32_t i = 0; i < t; ++i) {
      Ciphertext acc = identity;
      for (size_t s = 0; s < row.size(); ++s) {
        if ((x[s] >> i) & 1) acc = AddCiphertexts(pk, acc, row[s]);
      }
      bits.push_back(enc.Rerandomize(acc, rng));
    }
    out.push_back(std::move(bits));
  }
  return out;
}

PreparedQuery BuildQuery(const Encryptor& enc, const ClientModelView& view,
                         const FeatureVector& x, RandomSource& rng) {
  CheckFeatureVector(x, view.n, view.t);
  PreparedQuery out;
  for (const auto& map : view.feature_maps) {
    out.query.selected.push_back(SelectFeatures(enc, map, x, view.t, rng));
  }
  out.mac_key = rng.Range(1, enc.pk().n);
  out.query.mac_key = enc.Encrypt(out.mac_key, rng);
  rng.Fill(out.query.nonce);
  return out;
}

}  // namespace hssdt
