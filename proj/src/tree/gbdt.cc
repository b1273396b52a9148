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

#include "hssdt/tree/gbdt.h"

#include "hssdt/common/errors.h"
#include "hssdt/compare/fixed_point.h"

namespace hssdt {

void GbdtModel::Validate() const {
  if (trees.empty()) Fail(ErrorCode::kDomain, "ensemble has no trees");
  for (const auto& tree : trees) {
    tree.Validate();
    if (tree.n != trees[0].n || tree.t != trees[0].t) {
      Fail(ErrorCode::kDomain, "ensemble trees disagree on n or t");
    }
    if (tree.frac_bits != frac_bits) {
      Fail(ErrorCode::kDomain, "ensemble trees disagree on fixed-point scale");
    }
  }
}

BigInt EvalGbdtPlain(const GbdtModel& model, const FeatureVector& x,
                     size_t bound_bits) {
  model.Validate();
  const BigInt bound = BigInt(1) << bound_bits;
  BigInt total = FromInt64(model.t0);
  for (const auto& tree : model.trees) {
    BigInt weighted = FromInt64(model.eta) * FromInt64(EvalPlain(tree, x).label);
    if (abs(weighted) >= bound) Fail(ErrorCode::kDomain, "weighted tree output out of bounds");
    total += weighted;
  }
  if (abs(total) >= bound) Fail(ErrorCode::kDomain, "ensemble output out of bounds");
  return total;
}

double DescaleGbdt(const BigInt& value, uint32_t frac_bits) {
  return Descale(value, 2 * frac_bits);
}

}  // namespace hssdt
