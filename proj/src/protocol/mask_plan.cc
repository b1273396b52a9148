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

#include "hssdt/protocol/mask_plan.h"

#include <numeric>
#include <string_view>

#include "hssdt/common/bytes.h"
#include "hssdt/common/hash.h"

namespace hssdt {
namespace {

// Byte stream HMAC(k, domain || counter) for counter = 0, 1, ...
class PrfStream final : public RandomSource {
 public:
  PrfStream(const Prf& prf, std::vector<uint8_t> domain)
      : prf_(prf), domain_(std::move(domain)) {}

  void Fill(std::span<uint8_t> out) override {
    for (uint8_t& b : out) {
      if (pos_ == block_.size()) Refill();
      b = block_[pos_++];
    }
  }

 private:
  void Refill() {
    ByteWriter w;
    w.Bytes(domain_);
    w.U32(counter_++);
    block_ = prf_.Expand(w.data(), 32);
    pos_ = 0;
  }

  const Prf& prf_;
  std::vector<uint8_t> domain_;
  std::vector<uint8_t> block_;
  size_t pos_ = 0;
  uint32_t counter_ = 0;
};

std::vector<uint8_t> Domain(const QueryNonce& nonce, std::string_view tag,
                            uint32_t tree, uint32_t index) {
  ByteWriter w;
  w.Bytes(nonce);
  w.String(std::string(tag));
  w.U32(tree);
  w.U32(index);
  return w.Take();
}

}  // namespace

MaskPlan DeriveMaskPlan(const EvalKey& ek, const BigInt& n,
                        const std::vector<size_t>& leaves_per_tree,
                        const QueryNonce& nonce, bool ensemble) {
  Prf prf(ek.k_prf);
  MaskPlan plan;
  for (uint32_t j = 0; j < leaves_per_tree.size(); ++j) {
    size_t k = leaves_per_tree[j];
    TreeMasks tm;
    for (uint32_t i = 0; i < k; ++i) {
      PrfStream pc_stream(prf, Domain(nonce, "pc", j, i));
      BigInt r;
      do {
        r = pc_stream.Below(n);
      } while (sgn(r) == 0 || gcd(r, n) != 1);
      tm.pc_masks.push_back(r);
      PrfStream label_stream(prf, Domain(nonce, "label", j, i));
      tm.label_masks.push_back(label_stream.Below(n));
    }
    tm.perm.resize(k);
    std::iota(tm.perm.begin(), tm.perm.end(), 0);
    PrfStream perm_stream(prf, Domain(nonce, "perm", j, 0));
    for (size_t i = k; i > 1; --i) {
      size_t r = perm_stream.UniformU64(i);
      std::swap(tm.perm[i - 1], tm.perm[r]);
    }
    plan.trees.push_back(std::move(tm));
  }
  if (ensemble) {
    size_t count = leaves_per_tree.size() + 1;
    BigInt sum_v = 0, sum_p = 0;
    for (uint32_t j = 0; j + 1 < count; ++j) {
      PrfStream vs(prf, Domain(nonce, "gbdt-value", j, 0));
      PrfStream ps(prf, Domain(nonce, "gbdt-proof", j, 0));
      plan.value_masks.push_back(vs.Below(n));
      plan.proof_masks.push_back(ps.Below(n));
      sum_v += plan.value_masks.back();
      sum_p += plan.proof_masks.back();
    }
    plan.value_masks.push_back(Mod(-sum_v, n));
    plan.proof_masks.push_back(Mod(-sum_p, n));
  }
  return plan;
}

}  // namespace hssdt
