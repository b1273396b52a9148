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

#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "hssdt/common/errors.h"
#include "hssdt/tree/decision_tree.h"
#include "hssdt/tree/gbdt.h"
#include "hssdt/tree/model_json.h"
#include "hssdt/tree/plain_eval.h"

namespace hssdt {
namespace {

using nlohmann::json;

json Leaf(int id) { return json{{"leaf", id}}; }

json Node(int id, int feature, double thr, json left, json right) {
  return {{"id", id}, {"feature", feature}, {"kind", "threshold"},
          {"threshold", thr}, {"left", left}, {"right", right}};
}

// Height-2 shape: root 0, children 1 and 2, leaves 0..3 left to right.
json ShapeTwo() {
  json doc;
  doc["n"] = 3;
  doc["t"] = 4;
  doc["nodes"] = {Node(0, 2, 1, 1, 2), Node(1, 1, 3, Leaf(0), Leaf(1)),
                  Node(2, 3, -2, Leaf(2), Leaf(3))};
  doc["leaves"] = {{{"id", 0}, {"label", 10}}, {{"id", 1}, {"label", 11}},
                   {{"id", 2}, {"label", 12}}, {{"id", 3}, {"label", 13}}};
  return doc;
}

ErrorCode CodeOf(const std::function<void()>& fn, std::string* what = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (what) *what = e.what();
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

// Independent traversal over the heap layout, by recursion.
int64_t Traverse(const CompleteTree& tree, const FeatureVector& x, size_t j = 0) {
  if (j >= tree.m()) return tree.labels[j - tree.m()];
  const auto& d = tree.decisions[j];
  uint64_t v = x[d.feature - 1];
  bool left = d.kind == TestKind::kThreshold
                  ? v > d.threshold
                  : std::count(d.set.begin(), d.set.end(), v) > 0;
  return Traverse(tree, x, left ? 2 * j + 1 : 2 * j + 2);
}

// Random lopsided tree with leaves at varying depths.
DecisionTree RandomRawTree(RandomSource& rng, uint32_t max_h, uint32_t n, uint32_t t) {
  DecisionTree tree;
  tree.n = n;
  tree.t = t;
  std::function<int32_t(uint32_t)> build = [&](uint32_t depth) -> int32_t {
    DecisionTree::Node node;
    bool leaf = depth > 0 && (depth == max_h || rng.UniformU64(3) == 0);
    if (leaf) {
      node.is_leaf = true;
      node.label = static_cast<int64_t>(rng.UniformU64(100)) - 50;
      tree.nodes.push_back(node);
      return static_cast<int32_t>(tree.nodes.size() - 1);
    }
    node.decision.feature = 1 + rng.UniformU64(n);
    if (rng.UniformU64(4) == 0) {
      node.decision.kind = TestKind::kMember;
      node.decision.set = {rng.UniformU64(1u << t)};
    } else {
      node.decision.threshold = rng.UniformU64(1u << t);
    }
    tree.nodes.push_back(node);
    int32_t self = static_cast<int32_t>(tree.nodes.size() - 1);
    int32_t l = build(depth + 1);
    int32_t r = build(depth + 1);
    tree.nodes[self].left = l;
    tree.nodes[self].right = r;
    return self;
  };
  tree.root = build(0);
  return tree;
}

TEST(LoadTree, MinimalSingleDecision) {
  json doc = {{"n", 1}, {"t", 3},
              {"nodes", {Node(7, 1, 0, Leaf(0), Leaf(1))}},
              {"leaves", {{{"id", 0}, {"label", 1}}, {{"id", 1}, {"label", 0}}}}};
  DecisionTree tree = LoadTree(doc);
  EXPECT_EQ(tree.Height(), 1u);
  CompleteTree c = PadComplete(tree);
  EXPECT_EQ(c.m(), 1u);
  EXPECT_EQ(c.k(), 2u);
  EXPECT_EQ(c.decisions[0].threshold, 4u);
}

TEST(LoadTree, HeightTwoShape) {
  DecisionTree tree = LoadTree(ShapeTwo());
  EXPECT_TRUE(tree.IsComplete());
  CompleteTree c = PadComplete(tree);
  EXPECT_EQ(c.h, 2u);
  EXPECT_EQ(c.m(), 3u);
  EXPECT_EQ(c.labels, (std::vector<int64_t>{10, 11, 12, 13}));
  EXPECT_EQ(c.decisions[2].threshold, 8u - 2u);
  EXPECT_EQ(c.decisions[1].feature, 1u);
}

TEST(LoadTree, RejectsWithPath) {
  std::string what;
  json doc = ShapeTwo();
  doc["nodes"][1]["feature"] = 4;
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }, &what), ErrorCode::kIngestion);
  EXPECT_NE(what.find("$.nodes[1].feature"), std::string::npos) << what;

  doc = ShapeTwo();
  doc["nodes"][2]["threshold"] = 100;
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }, &what), ErrorCode::kIngestion);
  EXPECT_NE(what.find("$.nodes[2].threshold"), std::string::npos) << what;

  doc = ShapeTwo();
  doc["nodes"][1]["left"] = Leaf(9);
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }), ErrorCode::kIngestion);

  doc = ShapeTwo();
  doc["nodes"][1]["id"] = 0;
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }), ErrorCode::kIngestion);

  doc = ShapeTwo();
  doc["nodes"][2]["left"] = Leaf(0);
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }), ErrorCode::kIngestion);

  doc = ShapeTwo();
  doc["nodes"][1]["left"] = 0;  // cycle: no root left
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }), ErrorCode::kIngestion);

  doc = ShapeTwo();
  doc["nodes"][0]["kind"] = "oblique";
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }), ErrorCode::kIngestion);

  doc = ShapeTwo();
  doc["nodes"][0]["kind"] = "member";
  doc["nodes"][0]["set"] = {1, 1};
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }), ErrorCode::kIngestion);

  doc = ShapeTwo();
  doc.erase("t");
  EXPECT_EQ(CodeOf([&] { LoadTree(doc); }, &what), ErrorCode::kIngestion);
  EXPECT_NE(what.find("$.t"), std::string::npos);
}

TEST(LoadTree, MemberNodes) {
  json doc = ShapeTwo();
  doc["nodes"][0]["kind"] = "member";
  doc["nodes"][0]["threshold"] = nullptr;
  doc["nodes"][0]["set"] = {1, 3, 7};
  CompleteTree c = PadComplete(LoadTree(doc));
  EXPECT_EQ(c.decisions[0].kind, TestKind::kMember);
  EXPECT_EQ(c.decisions[0].set, (std::vector<uint64_t>{1, 3, 7}));
  // x2 = 3 is in the set, so go left.
  EXPECT_EQ(EvalPlain(c, {0, 3, 0}).leaf, 1u);
}

TEST(Pad, CompleteTreeUnchanged) {
  CompleteTree c = PadComplete(LoadTree(ShapeTwo()));
  EXPECT_EQ(PadComplete(c, 2), c);
}

TEST(Pad, LopsidedTreeToHeightTwo) {
  // Root splits to a leaf on the right and a decision on the left.
  json doc = {{"n", 2}, {"t", 3},
              {"nodes", {Node(0, 1, 1, 1, Leaf(2)), Node(1, 2, -1, Leaf(0), Leaf(1))}},
              {"leaves", {{{"id", 0}, {"label", 5}}, {{"id", 1}, {"label", 6}},
                          {{"id", 2}, {"label", 7}}}}};
  DecisionTree raw = LoadTree(doc);
  EXPECT_FALSE(raw.IsComplete());
  CompleteTree c = PadComplete(raw, 2);
  EXPECT_EQ(c.m(), 3u);
  EXPECT_EQ(c.k(), 4u);
  EXPECT_EQ(c.labels[2], 7);
  EXPECT_EQ(c.labels[3], 7);
  EXPECT_EQ(c.decisions[2].feature, 1u);
  EXPECT_EQ(c.decisions[2].threshold, 4u);
  for (uint64_t a = 0; a < 8; ++a) {
    for (uint64_t b = 0; b < 8; ++b) {
      EXPECT_EQ(EvalPlain(c, {a, b}).label, EvalPlain(raw, {a, b}));
    }
  }
}

TEST(Pad, GrowsToRequestedHeight) {
  CompleteTree c = PadComplete(LoadTree(ShapeTwo()), 4);
  EXPECT_EQ(c.m(), 15u);
  EXPECT_EQ(c.k(), 16u);
  EXPECT_EQ(CodeOf([&] { PadComplete(LoadTree(ShapeTwo()), 21); }), ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([&] { PadComplete(LoadTree(ShapeTwo()), 1); }), ErrorCode::kDomain);
}

TEST(Pad, PreservesEvaluationExhaustively) {
  SeededRandom rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    uint32_t n = 1 + rng.UniformU64(3);
    uint32_t t = 12 / n > 4 ? 4 : 12 / n;
    DecisionTree raw = RandomRawTree(rng, 4, n, t);
    raw.Validate();
    CompleteTree c = PadComplete(raw, raw.Height() + rng.UniformU64(2));
    uint64_t points = uint64_t{1} << (n * t);
    for (uint64_t p = 0; p < points; ++p) {
      FeatureVector x(n);
      for (uint32_t s = 0; s < n; ++s) x[s] = (p >> (s * t)) & ((1u << t) - 1);
      ASSERT_EQ(EvalPlain(c, x).label, EvalPlain(raw, x));
    }
  }
}

TEST(FeatureMatrix, OneHotRows) {
  CompleteTree tree;
  tree.h = 2;
  tree.n = 3;
  tree.t = 4;
  tree.decisions.resize(3);
  tree.decisions[0].feature = 2;
  tree.decisions[1].feature = 1;
  tree.decisions[2].feature = 2;
  tree.labels = {0, 0, 0, 0};
  auto rows = BuildFeatureMatrix(tree);
  EXPECT_EQ(rows, (std::vector<std::vector<uint8_t>>{{0, 1, 0}, {1, 0, 0}, {0, 1, 0}}));
}

TEST(FeatureMatrix, SelectsMappedFeature) {
  SeededRandom rng(2);
  RandomTreeOptions opt{.h = 2, .n = 13, .t = 8};
  CompleteTree tree = RandomCompleteTree(rng, opt);
  auto rows = BuildFeatureMatrix(tree);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.size(), 13u);
    EXPECT_EQ(std::accumulate(row.begin(), row.end(), 0), 1);
  }
  for (int i = 0; i < 100; ++i) {
    FeatureVector x(13);
    for (auto& v : x) v = rng.UniformU64(256);
    for (size_t j = 0; j < 3; ++j) {
      uint64_t dot = 0;
      for (size_t s = 0; s < 13; ++s) dot += rows[j][s] * x[s];
      EXPECT_EQ(dot, x[tree.decisions[j].feature - 1]);
    }
  }
}

TEST(EvalPlain, HeightTwoTraversal) {
  CompleteTree c = PadComplete(LoadTree(ShapeTwo()));
  // Root tests x2 > 1 (encoded 9): x2 = 12 -> b1 = 1, left. Node 1 tests
  // x1 > 3 (encoded 11): x1 = 0 -> b2 = 0, right. Leaf index 1.
  PlainEvaluation ev = EvalPlain(c, {0, 12, 0});
  EXPECT_EQ(ev.b[0], 1);
  EXPECT_EQ(ev.b[1], 0);
  EXPECT_EQ(ev.leaf, 1u);
  EXPECT_EQ(ev.label, 11);
}

TEST(EvalPlain, MaxThresholdsGoRight) {
  SeededRandom rng(3);
  CompleteTree tree = RandomCompleteTree(rng, {.h = 3, .n = 2, .t = 5});
  for (auto& d : tree.decisions) d.threshold = 31;
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(EvalPlain(tree, {rng.UniformU64(32), rng.UniformU64(32)}).leaf, 7u);
  }
}

TEST(EvalPlain, MatchesRecursiveTraverser) {
  SeededRandom rng(4);
  for (int i = 0; i < 300; ++i) {
    RandomTreeOptions opt{.h = 1 + static_cast<uint32_t>(rng.UniformU64(6)),
                          .n = 1 + static_cast<uint32_t>(rng.UniformU64(16)),
                          .t = 1 + static_cast<uint32_t>(rng.UniformU64(12)),
                          .member_percent = 20};
    CompleteTree tree = RandomCompleteTree(rng, opt);
    FeatureVector x(opt.n);
    for (auto& v : x) v = rng.UniformU64(1u << opt.t);
    EXPECT_EQ(EvalPlain(tree, x).label, Traverse(tree, x));
  }
  CompleteTree tree = RandomCompleteTree(rng, {.h = 2, .n = 3, .t = 4});
  EXPECT_EQ(CodeOf([&] { EvalPlain(tree, {1, 2}); }), ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([&] { EvalPlain(tree, {1, 2, 16}); }), ErrorCode::kDomain);
}

TEST(PathCosts, HeightTwoExample) {
  for (uint8_t b3 : {0, 1}) {
    auto pc = PathCostsPlain(2, {1, 0, b3});
    EXPECT_EQ(pc, (std::vector<uint64_t>{1, 0, 1 + (1u - b3), 1u + b3}));
  }
  auto ones = PathCostsPlain(3, std::vector<uint8_t>(7, 1));
  EXPECT_EQ(ones[0], 0u);
}

TEST(PathCosts, ExactlyOneZeroAtTakenLeaf) {
  for (uint32_t h = 1; h <= 4; ++h) {
    size_t m = (size_t{1} << h) - 1;
    CompleteTree tree;
    tree.h = h;
    tree.n = 1;
    tree.t = 1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
      std::vector<uint8_t> b(m);
      for (size_t j = 0; j < m; ++j) b[j] = (mask >> j) & 1;
      auto pc = PathCostsPlain(h, b);
      size_t zeros = std::count(pc.begin(), pc.end(), 0u);
      ASSERT_EQ(zeros, 1u);
      size_t j = 0;
      for (uint32_t d = 0; d < h; ++d) j = b[j] ? 2 * j + 1 : 2 * j + 2;
      ASSERT_EQ(pc[j - m], 0u);
    }
  }
}

TEST(PathCosts, ZeroLeafCarriesEvalLabel) {
  SeededRandom rng(5);
  for (int i = 0; i < 100; ++i) {
    CompleteTree tree = RandomCompleteTree(rng, {.h = 4, .n = 3, .t = 6, .member_percent = 30});
    FeatureVector x{rng.UniformU64(64), rng.UniformU64(64), rng.UniformU64(64)};
    PlainEvaluation ev = EvalPlain(tree, x);
    auto pc = PathCostsPlain(tree.h, ev.b);
    EXPECT_EQ(pc[ev.leaf], 0u);
    EXPECT_EQ(tree.labels[ev.leaf], ev.label);
  }
}

CompleteTree ConstantTree(int64_t label) {
  CompleteTree c;
  c.h = 1;
  c.n = 1;
  c.t = 4;
  c.decisions.resize(1);
  c.labels = {label, label};
  return c;
}

TEST(Gbdt, DegenerateEnsembleEqualsTree) {
  SeededRandom rng(6);
  GbdtModel model;
  model.trees = {RandomCompleteTree(rng, {.h = 3, .n = 2, .t = 5})};
  model.eta = 1;
  model.t0 = 0;
  for (int i = 0; i < 20; ++i) {
    FeatureVector x{rng.UniformU64(32), rng.UniformU64(32)};
    EXPECT_EQ(EvalGbdtPlain(model, x), EvalPlain(model.trees[0], x).label);
  }
}

TEST(Gbdt, BiasPlusWeightedSum) {
  GbdtModel model;
  model.trees = {ConstantTree(3), ConstantTree(4)};
  model.eta = 1;
  model.t0 = 2;
  EXPECT_EQ(EvalGbdtPlain(model, {0}), 9);
  model.eta = 1LL << 40;
  model.trees = {ConstantTree(1LL << 40)};
  EXPECT_EQ(CodeOf([&] { EvalGbdtPlain(model, {0}, 64); }), ErrorCode::kDomain);
}

TEST(Gbdt, RandomEnsemblesMatchIndependentSum) {
  SeededRandom rng(7);
  for (int i = 0; i < 100; ++i) {
    GbdtModel model;
    model.frac_bits = 2;
    size_t s = 1 + rng.UniformU64(4);
    for (size_t j = 0; j < s; ++j) {
      CompleteTree tree = RandomCompleteTree(
          rng, {.h = 1 + static_cast<uint32_t>(rng.UniformU64(3)), .n = 3, .t = 6,
                .label_min = -40, .label_max = 40});
      tree.frac_bits = 2;
      model.trees.push_back(tree);
    }
    model.eta = static_cast<int64_t>(rng.UniformU64(8)) - 2;
    model.t0 = static_cast<int64_t>(rng.UniformU64(200)) - 100;
    FeatureVector x{rng.UniformU64(64), rng.UniformU64(64), rng.UniformU64(64)};
    int64_t want = model.t0;
    for (const auto& tree : model.trees) want += model.eta * Traverse(tree, x);
    EXPECT_EQ(EvalGbdtPlain(model, x), want);
  }
}

TEST(Json, CompleteTreeRoundTrip) {
  SeededRandom rng(8);
  for (int i = 0; i < 50; ++i) {
    RandomTreeOptions opt{.h = 1 + static_cast<uint32_t>(rng.UniformU64(5)), .n = 4,
                          .t = 10, .member_percent = 25, .label_min = -9, .label_max = 9};
    CompleteTree tree = RandomCompleteTree(rng, opt);
    tree.frac_bits = static_cast<uint32_t>(rng.UniformU64(3));
    EXPECT_EQ(PadComplete(LoadTree(TreeToJson(tree))), tree);
  }
}

TEST(Json, GbdtLoadPadsToCommonHeight) {
  json doc;
  doc["eta"] = 0.5;
  doc["t0"] = 1.25;
  json small = {{"n", 3}, {"t", 4}, {"frac_bits", 1},
                {"nodes", {Node(0, 1, 1, Leaf(0), Leaf(1))}},
                {"leaves", {{{"id", 0}, {"label", 1.5}}, {{"id", 1}, {"label", -1}}}}};
  json big = ShapeTwo();
  big["frac_bits"] = 1;
  doc["trees"] = {small, big};
  GbdtModel model = LoadGbdt(doc);
  EXPECT_EQ(model.trees.size(), 2u);
  EXPECT_EQ(model.trees[0].h, 2u);
  EXPECT_EQ(model.eta, 1);
  EXPECT_EQ(model.t0, 5);
  EXPECT_EQ(model.trees[0].labels[0], 3);
  EXPECT_EQ(LoadGbdt(GbdtToJson(model)), model);
  doc["trees"][1]["t"] = 5;
  EXPECT_EQ(CodeOf([&] { LoadGbdt(doc); }), ErrorCode::kIngestion);
}

}  // namespace
}  // namespace hssdt
