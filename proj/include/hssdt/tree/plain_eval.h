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

#ifndef HSSDT_TREE_PLAIN_EVAL_H_
#define HSSDT_TREE_PLAIN_EVAL_H_

#include <cstdint>
#include <vector>

#include "hssdt/tree/decision_tree.h"

namespace hssdt {

using FeatureVector = std::vector<uint64_t>;

struct PlainEvaluation {
  int64_t label = 0;
  std::vector<uint8_t> b;  // per decision, 1 = go left
  size_t leaf = 0;
};

// Throws kDomain unless x has n entries, each below 2^t.
void CheckFeatureVector(const FeatureVector& x, uint32_t n, uint32_t t);

uint8_t DecisionBit(const DecisionNode& node, const FeatureVector& x);

PlainEvaluation EvalPlain(const CompleteTree& tree, const FeatureVector& x);
int64_t EvalPlain(const DecisionTree& tree, const FeatureVector& x);

// Path cost of every leaf: sum of (1-b) over left edges and b over right
// edges on the root-to-leaf path. Zero exactly at the taken leaf.
std::vector<uint64_t> PathCostsPlain(uint32_t h, const std::vector<uint8_t>& b);

}  // namespace hssdt

#endif  // HSSDT_TREE_PLAIN_EVAL_H_
