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

#include "hssdt/protocol/server.h"

#include <string>

#include "hssdt/common/errors.h"
#include "hssdt/hss/paillier_evaluator.h"
#include "hssdt/protocol/algorithms.h"
#include "hssdt/protocol/mask_plan.h"

namespace hssdt {
namespace {

void CheckQuery(const EncryptedModel& model, const ClientQuery& query, EvalMode mode) {
  model.Validate();
  bool ensemble = model.kind == ModelKind::kGbdt;
  if (ensemble != (mode == EvalMode::kGbdt)) {
    Fail(ErrorCode::kProtocol, std::string("mode ") + EvalModeName(mode) +
                                   " does not match the model kind");
  }
  if (query.selected.size() != model.trees.size()) {
    Fail(ErrorCode::kProtocol, "query tree count does not match the model");
  }
  for (size_t j = 0; j < model.trees.size(); ++j) {
    const auto& rows = query.selected[j];
    if (rows.size() != model.trees[j].m()) {
      Fail(ErrorCode::kProtocol, "query row count does not match the model");
    }
    for (const auto& row : rows) {
      if (row.size() != model.t) Fail(ErrorCode::kProtocol, "query bit width mismatch");
    }
  }
}

std::vector<NodeInputs<Ciphertext>> Nodes(const EncryptedTree& tree,
                                          const std::vector<BitCiphertexts>& selected) {
  std::vector<NodeInputs<Ciphertext>> nodes(tree.m());
  for (size_t j = 0; j < tree.m(); ++j) {
    nodes[j].kind = tree.kinds[j];
    nodes[j].selected = selected[j];
    nodes[j].threshold = tree.thresholds[j];
    nodes[j].member_set = &tree.member_sets[j];
  }
  return nodes;
}

}  // namespace

ServerResponse Evaluate(const PublicKey& pk, const EvalKey& ek,
                        const EncryptedModel& model, const ClientQuery& query,
                        EvalMode mode, MetricsLedger* ledger,
                        const ServerOptions& options) {
  CheckQuery(model, query, mode);
  std::vector<size_t> leaves;
  for (const auto& tree : model.trees) leaves.push_back(tree.k());
  MaskPlan plan = DeriveMaskPlan(ek, pk.n, leaves, query.nonce, mode == EvalMode::kGbdt);
  if (options.zero_ensemble_masks) {
    for (auto& v : plan.value_masks) v = 0;
    for (auto& v : plan.proof_masks) v = 0;
  }

  PaillierEvaluator ev(pk, ek, ledger);
  ServerResponse resp;
  resp.sigma = ek.sigma;
  resp.mode = mode;
  for (size_t j = 0; j < model.trees.size(); ++j) {
    const EncryptedTree& tree = model.trees[j];
    auto b = DecisionBits(ev, Nodes(tree, query.selected[j]));
    std::span<const Ciphertext> labels(tree.labels);
    switch (mode) {
      case EvalMode::kPlain:
        resp.trees.push_back(SelectLeaves(ev, tree.h, b, labels, plan.trees[j]));
        break;
      case EvalMode::kVerifiable:
        resp.trees.push_back(
            SelectLeavesVerifiable(ev, tree.h, b, labels, query.mac_key, plan.trees[j]));
        break;
      case EvalMode::kGbdt:
        resp.trees.push_back(SelectLeavesEnsemble(ev, tree.h, b, labels, *model.eta,
                                                  query.mac_key, plan.trees[j],
                                                  plan.value_masks[j + 1],
                                                  plan.proof_masks[j + 1]));
        break;
    }
  }
  if (mode == EvalMode::kGbdt) {
    auto [v, p] = EnsembleBias(ev, *model.t0, query.mac_key, plan.value_masks[0],
                               plan.proof_masks[0]);
    resp.t0 = v;
    resp.t0_proof = p;
  }
  return resp;
}

uint64_t ExpectedGates(const EncryptedModel& model, EvalMode mode) {
  uint64_t total = 0;
  uint64_t t = model.t;
  for (const auto& tree : model.trees) {
    for (size_t j = 0; j < tree.m(); ++j) {
      if (tree.kinds[j] == TestKind::kThreshold) {
        total += 4 * t - 2;
      } else {
        total += 3 * t * tree.member_sets[j].size();
      }
    }
    uint64_t k = tree.k();
    total += k;  // label conversion
    if (mode == EvalMode::kVerifiable) total += k;
    if (mode == EvalMode::kGbdt) total += 2 * k;
  }
  if (mode == EvalMode::kGbdt) total += 2;
  return total;
}

}  // namespace hssdt
