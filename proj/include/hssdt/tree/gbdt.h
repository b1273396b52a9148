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

#ifndef HSSDT_TREE_GBDT_H_
#define HSSDT_TREE_GBDT_H_

#include <cstdint>
#include <vector>

#include "hssdt/common/bigint.h"
#include "hssdt/tree/decision_tree.h"
#include "hssdt/tree/plain_eval.h"

namespace hssdt {

// Prediction = t0 + eta * sum of tree outputs. Labels and eta are scaled by
// 2^frac_bits, t0 by 2^(2*frac_bits), so the result is at scale
// 2^(2*frac_bits).
struct GbdtModel {
  std::vector<CompleteTree> trees;
  int64_t eta = 1;
  int64_t t0 = 0;
  uint32_t frac_bits = 0;

  // Throws kDomain if there are no trees or they disagree on n, t or scale.
  void Validate() const;
  uint32_t n() const { return trees.front().n; }
  uint32_t t() const { return trees.front().t; }
  bool operator==(const GbdtModel&) const = default;
};

// Exact aggregate. Throws kDomain if any weighted tree output or the total
// reaches 2^bound_bits in magnitude.
BigInt EvalGbdtPlain(const GbdtModel& model, const FeatureVector& x,
                     size_t bound_bits = 200);

double DescaleGbdt(const BigInt& value, uint32_t frac_bits);

}  // namespace hssdt

#endif  // HSSDT_TREE_GBDT_H_
