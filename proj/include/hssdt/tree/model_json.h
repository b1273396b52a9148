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

#ifndef HSSDT_TREE_MODEL_JSON_H_
#define HSSDT_TREE_MODEL_JSON_H_

#include <string>

#include "json.hpp"
#include "hssdt/tree/decision_tree.h"
#include "hssdt/tree/gbdt.h"

namespace hssdt {

// Tree document:
//   { "n": int, "t": int, "frac_bits": int (optional, default 0),
//     "nodes": [ { "id": int, "feature": int (1-based),
//                  "kind": "threshold" | "member",
//                  "threshold": number | null, "set": [int] | null,
//                  "left": node-id | {"leaf": leaf-id},
//                  "right": node-id | {"leaf": leaf-id} } ],
//     "leaves": [ { "id": int, "label": number } ] }
// The root is the one node that no other node references. Thresholds and
// labels are fixed-point scaled by 2^frac_bits (thresholds also offset by
// 2^(t-1)); set elements are raw category codes.
//
// Ensemble document: { "eta": number, "t0": number, "trees": [tree, ...] }.
//
// All loaders throw kIngestion with a JSON path on any violation.
DecisionTree LoadTree(const nlohmann::json& doc);
GbdtModel LoadGbdt(const nlohmann::json& doc);
nlohmann::json ReadJsonFile(const std::string& path);
bool IsGbdtDocument(const nlohmann::json& doc);

nlohmann::json TreeToJson(const CompleteTree& tree);
nlohmann::json GbdtToJson(const GbdtModel& model);

}  // namespace hssdt

#endif  // HSSDT_TREE_MODEL_JSON_H_
