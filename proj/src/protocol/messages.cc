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

#include "hssdt/protocol/messages.h"

#include <string>

#include "hssdt/common/errors.h"

namespace hssdt {

const char* EvalModeName(EvalMode mode) {
  switch (mode) {
    case EvalMode::kPlain:
      return "plain";
    case EvalMode::kVerifiable:
      return "verifiable";
    case EvalMode::kGbdt:
      return "gbdt";
  }
  return "unknown";
}

EvalMode ParseEvalMode(const std::string& name) {
  if (name == "plain") return EvalMode::kPlain;
  if (name == "verifiable") return EvalMode::kVerifiable;
  if (name == "gbdt") return EvalMode::kGbdt;
  Fail(ErrorCode::kDomain, "unknown mode '" + name + "'");
}

namespace {

void Check(bool ok, const std::string& what) {
  if (!ok) Fail(ErrorCode::kProtocol, "malformed encrypted model: " + what);
}

}  // namespace

void EncryptedModel::Validate() const {
  Check(n >= 1, "n must be positive");
  Check(t >= 1 && t <= 32, "t out of range");
  Check(!trees.empty(), "no trees");
  if (kind == ModelKind::kTree) {
    Check(trees.size() == 1, "single-tree model with several trees");
    Check(!eta && !t0, "single-tree model carries ensemble fields");
  } else {
    Check(eta && t0, "ensemble model without eta or bias");
  }
  for (const auto& tree : trees) {
    Check(tree.h >= 1 && tree.h <= kMaxTreeHeight, "height out of range");
    size_t m = (size_t{1} << tree.h) - 1;
    Check(tree.kinds.size() == m && tree.thresholds.size() == m &&
              tree.member_sets.size() == m && tree.feature_map.size() == m,
          "decision count does not match height");
    Check(tree.labels.size() == m + 1, "leaf count does not match height");
    for (size_t j = 0; j < m; ++j) {
      Check(tree.feature_map[j].size() == n, "feature map row width");
      if (tree.kinds[j] == TestKind::kThreshold) {
        Check(tree.thresholds[j].size() == t && tree.member_sets[j].empty(),
              "threshold node shape");
      } else {
        Check(tree.thresholds[j].empty(), "member node carries a threshold");
        for (const auto& e : tree.member_sets[j]) Check(e.size() == t, "set element width");
      }
    }
  }
}

ClientModelView MakeClientView(const EncryptedModel& model) {
  ClientModelView view;
  view.kind = model.kind;
  view.n = model.n;
  view.t = model.t;
  view.frac_bits = model.frac_bits;
  for (const auto& tree : model.trees) {
    view.heights.push_back(tree.h);
    view.feature_maps.push_back(tree.feature_map);
  }
  return view;
}

}  // namespace hssdt
