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

#include "hssdt/tree/model_json.h"

#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "hssdt/common/errors.h"
#include "hssdt/compare/fixed_point.h"

namespace hssdt {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& path, const std::string& msg) {
  Fail(ErrorCode::kIngestion, path + ": " + msg);
}

const json& Field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) Bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Bad(path + "." + key, "missing");
  return *it;
}

int64_t Int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) Bad(path, "expected an integer");
  return v.get<int64_t>();
}

double Number(const json& v, const std::string& path) {
  if (!v.is_number()) Bad(path, "expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) Bad(path, "not finite");
  return d;
}

struct Ref {
  bool leaf;
  int64_t id;
};

Ref ParseRef(const json& v, const std::string& path) {
  if (v.is_number_integer()) return {false, v.get<int64_t>()};
  if (v.is_object() && v.size() == 1 && v.contains("leaf")) {
    return {true, Int(v["leaf"], path + ".leaf")};
  }
  Bad(path, "expected a node id or {\"leaf\": id}");
}

}  // namespace

DecisionTree LoadTree(const json& doc) {
  const std::string root_path = "$";
  DecisionTree tree;
  int64_t n = Int(Field(doc, "n", root_path), "$.n");
  int64_t t = Int(Field(doc, "t", root_path), "$.t");
  int64_t f = doc.contains("frac_bits") ? Int(doc["frac_bits"], "$.frac_bits") : 0;
  if (n < 1 || n > 1 << 20) Bad("$.n", "out of range");
  if (t < 1 || t > 32) Bad("$.t", "must be in [1, 32]");
  if (f < 0 || f >= t) Bad("$.frac_bits", "must be in [0, t)");
  tree.n = static_cast<uint32_t>(n);
  tree.t = static_cast<uint32_t>(t);
  tree.frac_bits = static_cast<uint32_t>(f);
  FixedPointSpec spec{tree.t, tree.frac_bits};

  const json& nodes = Field(doc, "nodes", root_path);
  const json& leaves = Field(doc, "leaves", root_path);
  if (!nodes.is_array() || nodes.empty()) Bad("$.nodes", "expected a non-empty array");
  if (!leaves.is_array() || leaves.empty()) Bad("$.leaves", "expected a non-empty array");

  // Leaves first so references can be resolved to arena indices.
  std::map<int64_t, int32_t> leaf_index, node_index;
  for (size_t i = 0; i < leaves.size(); ++i) {
    std::string path = "$.leaves[" + std::to_string(i) + "]";
    int64_t id = Int(Field(leaves[i], "id", path), path + ".id");
    double label = Number(Field(leaves[i], "label", path), path + ".label");
    if (leaf_index.count(id)) Bad(path + ".id", "duplicate leaf id");
    DecisionTree::Node leaf;
    leaf.is_leaf = true;
    try {
      leaf.label = ScaleSigned(label, tree.frac_bits);
    } catch (const Error& e) {
      Bad(path + ".label", e.what());
    }
    leaf_index[id] = static_cast<int32_t>(tree.nodes.size());
    tree.nodes.push_back(leaf);
  }
  size_t first_node = tree.nodes.size();
  for (size_t i = 0; i < nodes.size(); ++i) {
    std::string path = "$.nodes[" + std::to_string(i) + "]";
    int64_t id = Int(Field(nodes[i], "id", path), path + ".id");
    if (node_index.count(id)) Bad(path + ".id", "duplicate node id");
    node_index[id] = static_cast<int32_t>(first_node + i);
  }
  std::set<int32_t> referenced;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const json& jn = nodes[i];
    std::string path = "$.nodes[" + std::to_string(i) + "]";
    DecisionTree::Node node;
    int64_t feature = Int(Field(jn, "feature", path), path + ".feature");
    if (feature < 1 || feature > n) {
      Bad(path + ".feature", "index " + std::to_string(feature) + " outside [1, " +
                                 std::to_string(n) + "]");
    }
    node.decision.feature = static_cast<uint32_t>(feature);
    std::string kind = "threshold";
    if (jn.contains("kind") && !jn["kind"].is_null()) {
      if (!jn["kind"].is_string()) Bad(path + ".kind", "expected a string");
      kind = jn["kind"].get<std::string>();
    }
    if (kind == "threshold") {
      node.decision.kind = TestKind::kThreshold;
      double thr = Number(Field(jn, "threshold", path), path + ".threshold");
      try {
        node.decision.threshold = ScaleFixed(thr, spec);
      } catch (const Error& e) {
        Bad(path + ".threshold", e.what());
      }
    } else if (kind == "member") {
      node.decision.kind = TestKind::kMember;
      const json& set = Field(jn, "set", path);
      if (!set.is_array()) Bad(path + ".set", "expected an array");
      std::set<uint64_t> distinct;
      for (size_t e = 0; e < set.size(); ++e) {
        std::string ep = path + ".set[" + std::to_string(e) + "]";
        int64_t code = Int(set[e], ep);
        if (code < 0 || static_cast<uint64_t>(code) >> t) Bad(ep, "category code overflows t bits");
        if (!distinct.insert(static_cast<uint64_t>(code)).second) Bad(ep, "duplicate element");
        node.decision.set.push_back(static_cast<uint64_t>(code));
      }
    } else {
      Bad(path + ".kind", "unknown kind '" + kind + "'");
    }
    for (const char* side : {"left", "right"}) {
      std::string sp = path + "." + side;
      Ref ref = ParseRef(Field(jn, side, path), sp);
      const auto& index = ref.leaf ? leaf_index : node_index;
      auto it = index.find(ref.id);
      if (it == index.end()) {
        Bad(sp, std::string("unknown ") + (ref.leaf ? "leaf" : "node") + " id " +
                    std::to_string(ref.id));
      }
      if (!referenced.insert(it->second).second) Bad(sp, "target referenced twice");
      (std::string(side) == "left" ? node.left : node.right) = it->second;
    }
    tree.nodes.push_back(node);
  }
  std::vector<int32_t> roots;
  for (size_t i = first_node; i < tree.nodes.size(); ++i) {
    if (!referenced.count(static_cast<int32_t>(i))) roots.push_back(static_cast<int32_t>(i));
  }
  if (roots.size() != 1) {
    Bad("$.nodes", "expected exactly one root node, found " + std::to_string(roots.size()));
  }
  for (size_t i = 0; i < first_node; ++i) {
    if (!referenced.count(static_cast<int32_t>(i))) {
      Bad("$.leaves[" + std::to_string(i) + "]", "leaf is never referenced");
    }
  }
  tree.root = roots[0];
  tree.Validate();
  return tree;
}

bool IsGbdtDocument(const json& doc) { return doc.is_object() && doc.contains("trees"); }

GbdtModel LoadGbdt(const json& doc) {
  GbdtModel model;
  const json& trees = Field(doc, "trees", "$");
  if (!trees.is_array() || trees.empty()) Bad("$.trees", "expected a non-empty array");
  std::vector<DecisionTree> raw;
  uint32_t height = 1;
  for (size_t i = 0; i < trees.size(); ++i) {
    std::string path = "$.trees[" + std::to_string(i) + "]";
    try {
      raw.push_back(LoadTree(trees[i]));
    } catch (const Error& e) {
      Bad(path, e.what());
    }
    if (raw.back().n != raw[0].n || raw.back().t != raw[0].t ||
        raw.back().frac_bits != raw[0].frac_bits) {
      Bad(path, "tree disagrees with the first tree on n, t or frac_bits");
    }
    height = std::max(height, raw.back().Height());
  }
  model.frac_bits = raw[0].frac_bits;
  // One common height so the servers cannot tell trees apart by size.
  for (const auto& tree : raw) model.trees.push_back(PadComplete(tree, height));
  try {
    model.eta = ScaleSigned(Number(Field(doc, "eta", "$"), "$.eta"), model.frac_bits);
    model.t0 = ScaleSigned(Number(Field(doc, "t0", "$"), "$.t0"), 2 * model.frac_bits);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIngestion) throw;
    Bad("$.eta/$.t0", e.what());
  }
  return model;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kIngestion, path + ": invalid JSON: " + e.what());
  }
}

json TreeToJson(const CompleteTree& tree) {
  const double scale = std::ldexp(1.0, static_cast<int>(tree.frac_bits));
  const double offset = std::ldexp(1.0, static_cast<int>(tree.t) - 1);
  json doc;
  doc["n"] = tree.n;
  doc["t"] = tree.t;
  doc["frac_bits"] = tree.frac_bits;
  json nodes = json::array();
  size_t m = tree.m();
  auto child = [&](size_t pos) -> json {
    if (pos >= m) return json{{"leaf", pos - m}};
    return pos;
  };
  for (size_t j = 0; j < m; ++j) {
    const auto& d = tree.decisions[j];
    json node;
    node["id"] = j;
    node["feature"] = d.feature;
    if (d.kind == TestKind::kThreshold) {
      node["kind"] = "threshold";
      node["threshold"] = (static_cast<double>(d.threshold) - offset) / scale;
      node["set"] = nullptr;
    } else {
      node["kind"] = "member";
      node["threshold"] = nullptr;
      node["set"] = d.set;
    }
    node["left"] = child(2 * j + 1);
    node["right"] = child(2 * j + 2);
    nodes.push_back(node);
  }
  json leaves = json::array();
  for (size_t i = 0; i < tree.k(); ++i) {
    leaves.push_back({{"id", i}, {"label", static_cast<double>(tree.labels[i]) / scale}});
  }
  doc["nodes"] = nodes;
  doc["leaves"] = leaves;
  return doc;
}

json GbdtToJson(const GbdtModel& model) {
  json doc;
  doc["eta"] = std::ldexp(static_cast<double>(model.eta), -static_cast<int>(model.frac_bits));
  doc["t0"] = std::ldexp(static_cast<double>(model.t0), -2 * static_cast<int>(model.frac_bits));
  json trees = json::array();
  for (const auto& t : model.trees) trees.push_back(TreeToJson(t));
  doc["trees"] = trees;
  return doc;
}

}  // namespace hssdt
