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

#include "hssdt/tree/plain_eval.h"

#include <algorithm>

#include "hssdt/common/errors.h"

namespace hssdt {

void CheckFeatureVector(const FeatureVector& x, uint32_t n, uint32_t t) {
  if (x.size() != n) {
    Fail(ErrorCode::kDomain, "feature vector has " + std::to_string(x.size()) +
                                 " entries, model expects " + std::to_string(n));
  }
  for (uint64_t v : x) {
    if (t < 64 && (v >> t) != 0) Fail(ErrorCode::kDomain, "feature overflows t bits");
  }
}

uint8_t DecisionBit(const DecisionNode& node, const FeatureVector& x) {
  uint64_t v = x.at(node.feature - 1);
  if (node.kind == TestKind::kThreshold) return v > node.threshold ? 1 : 0;
  return std::find(node.set.begin(), node.set.end(), v) != node.set.end() ? 1 : 0;
}

PlainEvaluation EvalPlain(const CompleteTree& tree, const FeatureVector& x) {
  CheckFeatureVector(x, tree.n, tree.t);
  PlainEvaluation out;
  out.b.reserve(tree.m());
  for (const auto& d : tree.decisions) out.b.push_back(DecisionBit(d, x));
  size_t j = 0;
  for (uint32_t depth = 0; depth < tree.h; ++depth) {
    j = out.b[j] ? 2 * j + 1 : 2 * j + 2;
  }
  out.leaf = j - tree.m();
  out.label = tree.labels[out.leaf];
  return out;
}

int64_t EvalPlain(const DecisionTree& tree, const FeatureVector& x) {
  CheckFeatureVector(x, tree.n, tree.t);
  int32_t i = tree.root;
  while (!tree.nodes.at(i).is_leaf) {
    const auto& node = tree.nodes[i];
    i = DecisionBit(node.decision, x) ? node.left : node.right;
  }
  return tree.nodes[i].label;
}

std::vector<uint64_t> PathCostsPlain(uint32_t h, const std::vector<uint8_t>& b) {
  size_t m = (size_t{1} << h) - 1;
  if (b.size() != m) Fail(ErrorCode::kDomain, "decision vector has wrong length");
  std::vector<uint64_t> costs(m + 1, 0);
  for (size_t leaf = 0; leaf <= m; ++leaf) {
    size_t j = 0;
    for (uint32_t depth = 0; depth < h; ++depth) {
      bool right = (leaf >> (h - 1 - depth)) & 1;
      costs[leaf] += right ? b[j] : 1 - b[j];
      j = right ? 2 * j + 2 : 2 * j + 1;
    }
  }
  return costs;
}

}  // namespace hssdt
