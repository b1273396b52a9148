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

#ifndef HSSDT_PROTOCOL_MESSAGES_H_
#define HSSDT_PROTOCOL_MESSAGES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hssdt/hss/keys.h"
#include "hssdt/tree/decision_tree.h"

namespace hssdt {

enum class ModelKind : uint8_t { kTree = 0, kGbdt = 1 };
enum class EvalMode : uint8_t { kPlain = 0, kVerifiable = 1, kGbdt = 2 };

const char* EvalModeName(EvalMode mode);
EvalMode ParseEvalMode(const std::string& name);  // throws kDomain

using BitCiphertexts = std::vector<Ciphertext>;  // LSB first
using QueryNonce = std::array<uint8_t, 16>;

// One encrypted tree. Node kinds and set sizes are public shape data; the
// feature mapping only exists as the encrypted one-hot matrix.
struct EncryptedTree {
  uint32_t h = 0;
  std::vector<TestKind> kinds;                          // m
  std::vector<BitCiphertexts> thresholds;               // m; empty for member nodes
  std::vector<std::vector<BitCiphertexts>> member_sets;  // m; empty for threshold nodes
  std::vector<Ciphertext> labels;                       // k
  std::vector<std::vector<Ciphertext>> feature_map;     // m x n

  size_t m() const { return kinds.size(); }
  size_t k() const { return labels.size(); }
  bool operator==(const EncryptedTree&) const = default;
};

struct EncryptedModel {
  ModelKind kind = ModelKind::kTree;
  uint32_t n = 0;
  uint32_t t = 0;
  uint32_t frac_bits = 0;
  std::vector<EncryptedTree> trees;
  std::optional<Ciphertext> eta;  // ensembles only
  std::optional<Ciphertext> t0;   // ensembles only

  // Throws kProtocol on inconsistent dimensions.
  void Validate() const;
  bool operator==(const EncryptedModel&) const = default;
};

// What a client downloads once per model: shape plus the encrypted
// feature maps.
struct ClientModelView {
  ModelKind kind = ModelKind::kTree;
  uint32_t n = 0;
  uint32_t t = 0;
  uint32_t frac_bits = 0;
  std::vector<uint32_t> heights;
  std::vector<std::vector<std::vector<Ciphertext>>> feature_maps;  // per tree m x n
  bool operator==(const ClientModelView&) const = default;
};

ClientModelView MakeClientView(const EncryptedModel& model);

struct ClientQuery {
  std::vector<std::vector<BitCiphertexts>> selected;  // per tree, m rows of t bits
  Ciphertext mac_key;
  QueryNonce nonce{};
  bool operator==(const ClientQuery&) const = default;
};

struct LeafShares {
  BigInt pc;
  BigInt value;  // label, or weighted label for ensembles
  BigInt proof;  // unused in plain mode
  bool operator==(const LeafShares&) const = default;
};

struct ServerResponse {
  uint8_t sigma = 0;
  EvalMode mode = EvalMode::kPlain;
  std::vector<std::vector<LeafShares>> trees;  // per tree, k entries, permuted
  BigInt t0;        // ensembles only
  BigInt t0_proof;  // ensembles only
  bool operator==(const ServerResponse&) const = default;
};

}  // namespace hssdt

#endif  // HSSDT_PROTOCOL_MESSAGES_H_
