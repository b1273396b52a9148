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

#ifndef HSSDT_TREE_DECISION_TREE_H_
#define HSSDT_TREE_DECISION_TREE_H_

#include <cstdint>
#include <vector>

#include "hssdt/common/random.h"

namespace hssdt {

inline constexpr uint32_t kMaxTreeHeight = 20;

enum class TestKind : uint8_t { kThreshold = 0, kMember = 1 };

// One decision: go left iff x[feature] > threshold (kThreshold) or
// x[feature] is in `set` (kMember). Values are t-bit encoded; feature is
// 1-based.
struct DecisionNode {
  uint32_t feature = 1;
  TestKind kind = TestKind::kThreshold;
  uint64_t threshold = 0;
  std::vector<uint64_t> set;
  bool operator==(const DecisionNode&) const = default;
};

// Arbitrary (possibly lopsided) binary tree as loaded from a model file.
struct DecisionTree {
  struct Node {
    bool is_leaf = false;
    int64_t label = 0;      // leaves only
    DecisionNode decision;  // internal nodes only
    int32_t left = -1;
    int32_t right = -1;
  };
  uint32_t n = 0;  // feature count
  uint32_t t = 0;  // bit width
  uint32_t frac_bits = 0;
  std::vector<Node> nodes;
  int32_t root = 0;

  // Depth of the deepest leaf (a single decision node has height 1).
  uint32_t Height() const;
  bool IsComplete() const;
  // Throws kIngestion on structural problems (cycles, bad indices, ...).
  void Validate() const;
};

// Complete tree of height h in heap order: decision j has children 2j+1 and
// 2j+2; leaf i sits at depth h and is reached by the bits of i, MSB first,
// 0 meaning left.
struct CompleteTree {
  uint32_t h = 0;
  uint32_t n = 0;
  uint32_t t = 0;
  uint32_t frac_bits = 0;
  std::vector<DecisionNode> decisions;  // m = 2^h - 1
  std::vector<int64_t> labels;          // k = 2^h

  size_t m() const { return decisions.size(); }
  size_t k() const { return labels.size(); }
  // Throws kDomain when sizes or values are inconsistent.
  void Validate() const;
  bool operator==(const CompleteTree&) const = default;
};

// Replaces each shallow leaf by dummy decisions (feature 1, threshold
// 2^(t-1)) whose children both copy the leaf. Throws kDomain if target_h is
// below the tree height or above kMaxTreeHeight.
CompleteTree PadComplete(const DecisionTree& tree, uint32_t target_h);
CompleteTree PadComplete(const DecisionTree& tree);

// Pads an already complete tree to a larger height.
CompleteTree PadComplete(const CompleteTree& tree, uint32_t target_h);

// m x n one-hot rows, row j hot at column feature-1.
std::vector<std::vector<uint8_t>> BuildFeatureMatrix(const CompleteTree& tree);

struct RandomTreeOptions {
  uint32_t h = 3;
  uint32_t n = 4;
  uint32_t t = 10;
  // Probability (in percent) that a decision node is a set-membership test.
  uint32_t member_percent = 0;
  uint32_t max_set_size = 4;
  int64_t label_min = 0;
  int64_t label_max = 9;
};

CompleteTree RandomCompleteTree(RandomSource& rng, const RandomTreeOptions& opt);

}  // namespace hssdt

#endif  // HSSDT_TREE_DECISION_TREE_H_
