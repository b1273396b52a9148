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

#include "hssdt/tree/decision_tree.h"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "hssdt/common/errors.h"

namespace hssdt {

uint32_t DecisionTree::Height() const {
  std::function<uint32_t(int32_t)> depth = [&](int32_t i) -> uint32_t {
    const Node& node = nodes.at(i);
    if (node.is_leaf) return 0;
    return 1 + std::max(depth(node.left), depth(node.right));
  };
  return nodes.empty() ? 0 : depth(root);
}

bool DecisionTree::IsComplete() const {
  uint32_t h = Height();
  std::function<bool(int32_t, uint32_t)> ok = [&](int32_t i, uint32_t d) {
    const Node& node = nodes.at(i);
    if (node.is_leaf) return d == h;
    return ok(node.left, d + 1) && ok(node.right, d + 1);
  };
  return ok(root, 0);
}

void DecisionTree::Validate() const {
  auto bad = [](const std::string& msg) { Fail(ErrorCode::kIngestion, msg); };
  if (nodes.empty()) bad("tree has no nodes");
  if (t < 1 || t > 32) bad("t must be in [1, 32]");
  if (n < 1) bad("n must be positive");
  if (root < 0 || static_cast<size_t>(root) >= nodes.size()) bad("bad root index");
  if (nodes[root].is_leaf) bad("root must be a decision node");
  std::vector<int> seen(nodes.size(), 0);
  std::vector<int32_t> stack = {root};
  while (!stack.empty()) {
    int32_t i = stack.back();
    stack.pop_back();
    if (seen[i]++) bad("node " + std::to_string(i) + " is reachable twice");
    const Node& node = nodes[i];
    if (node.is_leaf) continue;
    const DecisionNode& d = node.decision;
    if (d.feature < 1 || d.feature > n) {
      bad("node " + std::to_string(i) + ": feature index " +
          std::to_string(d.feature) + " outside [1, " + std::to_string(n) + "]");
    }
    uint64_t limit = uint64_t{1} << t;
    if (d.kind == TestKind::kThreshold && d.threshold >= limit) {
      bad("node " + std::to_string(i) + ": threshold overflows t bits");
    }
    std::set<uint64_t> distinct(d.set.begin(), d.set.end());
    if (distinct.size() != d.set.size()) {
      bad("node " + std::to_string(i) + ": set elements must be distinct");
    }
    for (uint64_t v : d.set) {
      if (v >= limit) bad("node " + std::to_string(i) + ": set element overflows t bits");
    }
    for (int32_t c : {node.left, node.right}) {
      if (c < 0 || static_cast<size_t>(c) >= nodes.size()) {
        bad("node " + std::to_string(i) + ": dangling child");
      }
      stack.push_back(c);
    }
  }
  if (Height() > kMaxTreeHeight) bad("tree deeper than the supported maximum");
}

void CompleteTree::Validate() const {
  if (h < 1 || h > kMaxTreeHeight) Fail(ErrorCode::kDomain, "height out of range");
  if (t < 1 || t > 32) Fail(ErrorCode::kDomain, "t out of range");
  if (decisions.size() != (size_t{1} << h) - 1 || labels.size() != size_t{1} << h) {
    Fail(ErrorCode::kDomain, "tree is not complete");
  }
  for (const auto& d : decisions) {
    if (d.feature < 1 || d.feature > n) Fail(ErrorCode::kDomain, "feature index out of range");
    if (d.kind == TestKind::kThreshold && (d.threshold >> t) != 0) {
      Fail(ErrorCode::kDomain, "threshold overflows t bits");
    }
    for (uint64_t v : d.set) {
      if ((v >> t) != 0) Fail(ErrorCode::kDomain, "set element overflows t bits");
    }
  }
}

namespace {

DecisionNode Dummy(uint32_t t) {
  DecisionNode d;
  d.feature = 1;
  d.kind = TestKind::kThreshold;
  d.threshold = uint64_t{1} << (t - 1);
  return d;
}

}  // namespace

CompleteTree PadComplete(const DecisionTree& tree, uint32_t target_h) {
  tree.Validate();
  uint32_t h = tree.Height();
  if (target_h < h || target_h > kMaxTreeHeight) {
    Fail(ErrorCode::kDomain, "cannot pad a height-" + std::to_string(h) +
                                 " tree to height " + std::to_string(target_h));
  }
  CompleteTree out;
  out.h = target_h;
  out.n = tree.n;
  out.t = tree.t;
  out.frac_bits = tree.frac_bits;
  out.decisions.resize((size_t{1} << target_h) - 1);
  out.labels.resize(size_t{1} << target_h);
  // Walk heap positions; a leaf above the bottom level is stretched by
  // repeating it under dummy decisions.
  std::function<void(size_t, uint32_t, int32_t)> place = [&](size_t pos, uint32_t depth,
                                                             int32_t src) {
    const auto& node = tree.nodes[src];
    if (depth == target_h) {
      out.labels[pos - out.decisions.size()] = node.label;
      return;
    }
    if (node.is_leaf) {
      out.decisions[pos] = Dummy(tree.t);
      place(2 * pos + 1, depth + 1, src);
      place(2 * pos + 2, depth + 1, src);
      return;
    }
    out.decisions[pos] = node.decision;
    place(2 * pos + 1, depth + 1, node.left);
    place(2 * pos + 2, depth + 1, node.right);
  };
  place(0, 0, tree.root);
  return out;
}

CompleteTree PadComplete(const DecisionTree& tree) {
  return PadComplete(tree, tree.Height());
}

CompleteTree PadComplete(const CompleteTree& tree, uint32_t target_h) {
  tree.Validate();
  if (target_h == tree.h) return tree;
  DecisionTree raw;
  raw.n = tree.n;
  raw.t = tree.t;
  raw.frac_bits = tree.frac_bits;
  size_t m = tree.m();
  for (size_t j = 0; j < m; ++j) {
    DecisionTree::Node node;
    node.decision = tree.decisions[j];
    node.left = static_cast<int32_t>(2 * j + 1);
    node.right = static_cast<int32_t>(2 * j + 2);
    raw.nodes.push_back(node);
  }
  for (int64_t label : tree.labels) {
    DecisionTree::Node leaf;
    leaf.is_leaf = true;
    leaf.label = label;
    raw.nodes.push_back(leaf);
  }
  return PadComplete(raw, target_h);
}

std::vector<std::vector<uint8_t>> BuildFeatureMatrix(const CompleteTree& tree) {
  std::vector<std::vector<uint8_t>> rows(tree.m(), std::vector<uint8_t>(tree.n, 0));
  for (size_t j = 0; j < tree.m(); ++j) rows[j][tree.decisions[j].feature - 1] = 1;
  return rows;
}

CompleteTree RandomCompleteTree(RandomSource& rng, const RandomTreeOptions& opt) {
  CompleteTree tree;
  tree.h = opt.h;
  tree.n = opt.n;
  tree.t = opt.t;
  size_t m = (size_t{1} << opt.h) - 1;
  uint64_t range = uint64_t{1} << opt.t;
  for (size_t j = 0; j < m; ++j) {
    DecisionNode d;
    d.feature = 1 + static_cast<uint32_t>(rng.UniformU64(opt.n));
    if (rng.UniformU64(100) < opt.member_percent) {
      d.kind = TestKind::kMember;
      size_t want = 1 + rng.UniformU64(std::min<uint64_t>(opt.max_set_size, range));
      std::set<uint64_t> s;
      while (s.size() < want) s.insert(rng.UniformU64(range));
      d.set.assign(s.begin(), s.end());
    } else {
      d.threshold = rng.UniformU64(range);
    }
    tree.decisions.push_back(d);
  }
  uint64_t span = static_cast<uint64_t>(opt.label_max - opt.label_min) + 1;
  for (size_t i = 0; i <= m; ++i) {
    tree.labels.push_back(opt.label_min + static_cast<int64_t>(rng.UniformU64(span)));
  }
  return tree;
}

}  // namespace hssdt
