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

#include "hssdt/protocol/provider.h"

#include <string>

#include "hssdt/compare/bit_cipher.h"
#include "hssdt/common/errors.h"

namespace hssdt {
namespace {

void CheckExact(const PublicKey& pk, const BigInt& v, const char* what) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) + 1 > pk.params.ExactBoundBits()) {
    Fail(ErrorCode::kDomain, std::string(what) + " too large for exact evaluation");
  }
}

EncryptedTree EncryptOne(const Encryptor& enc, const CompleteTree& tree,
                         RandomSource& rng) {
  tree.Validate();
  EncryptedTree out;
  out.h = tree.h;
  for (const auto& d : tree.decisions) {
    out.kinds.push_back(d.kind);
    if (d.kind == TestKind::kThreshold) {
      out.thresholds.push_back(EncryptBits(enc, d.threshold, tree.t, rng));
      out.member_sets.emplace_back();
    } else {
      out.thresholds.emplace_back();
      std::vector<BitCiphertexts> set;
      for (uint64_t v : d.set) set.push_back(EncryptBits(enc, v, tree.t, rng));
      out.member_sets.push_back(std::move(set));
    }
    std::vector<Ciphertext> row;
    row.reserve(tree.n);
    for (uint32_t s = 1; s <= tree.n; ++s) {
      row.push_back(enc.Encrypt(int64_t{s == d.feature ? 1 : 0}, rng));
    }
    out.feature_map.push_back(std::move(row));
  }
  for (int64_t label : tree.labels) {
    BigInt v = FromInt64(label);
    CheckExact(enc.pk(), v, "label");
    out.labels.push_back(enc.EncryptSigned(v, rng));
  }
  return out;
}

}  // namespace

EncryptedModel EncryptTree(const Encryptor& enc, const CompleteTree& tree,
                           RandomSource& rng) {
  EncryptedModel model;
  model.kind = ModelKind::kTree;
  model.n = tree.n;
  model.t = tree.t;
  model.frac_bits = tree.frac_bits;
  model.trees.push_back(EncryptOne(enc, tree, rng));
  return model;
}

EncryptedModel EncryptGbdt(const Encryptor& enc, const GbdtModel& gbdt,
                           RandomSource& rng) {
  gbdt.Validate();
  EncryptedModel model;
  model.kind = ModelKind::kGbdt;
  model.n = gbdt.n();
  model.t = gbdt.t();
  model.frac_bits = gbdt.frac_bits;
  BigInt eta = FromInt64(gbdt.eta);
  for (const auto& tree : gbdt.trees) {
    for (int64_t label : tree.labels) {
      CheckExact(enc.pk(), eta * FromInt64(label), "weighted label");
    }
    model.trees.push_back(EncryptOne(enc, tree, rng));
  }
  model.eta = enc.EncryptSigned(eta, rng);
  model.t0 = enc.EncryptSigned(FromInt64(gbdt.t0), rng);
  return model;
}

}  // namespace hssdt
