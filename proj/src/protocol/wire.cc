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

#include "hssdt/protocol/wire.h"

#include <cstring>
#include <string>

#include "hssdt/common/bytes.h"
#include "hssdt/common/errors.h"
#include "hssdt/hss/serialization.h"

namespace hssdt {
namespace {

void Header(ByteWriter& w, const char tag[4]) {
  w.Bytes(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(tag), 4));
  w.U8(kWireVersion);
}

void ExpectHeader(ByteReader& r, const char tag[4]) {
  auto got = r.Bytes(4);
  if (std::memcmp(got.data(), tag, 4) != 0) {
    Fail(ErrorCode::kDecode, std::string("expected ") + std::string(tag, 4) + " object");
  }
  uint8_t version = r.U8();
  if (version != kWireVersion) {
    Fail(ErrorCode::kDecode, "unsupported wire version " + std::to_string(version));
  }
}

void Require(bool ok, const char* what) {
  if (!ok) Fail(ErrorCode::kDecode, what);
}

void WriteCts(ByteWriter& w, const HssParams& p, const std::vector<Ciphertext>& cts) {
  for (const auto& c : cts) WriteCiphertext(w, p, c);
}

std::vector<Ciphertext> ReadCts(ByteReader& r, const PublicKey& pk, size_t count) {
  Require(r.remaining() / pk.params.CiphertextBytes() >= count, "truncated ciphertext list");
  std::vector<Ciphertext> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(ReadCiphertext(r, pk));
  return out;
}

void WriteShape(ByteWriter& w, ModelKind kind, uint32_t n, uint32_t t, uint32_t frac_bits,
                size_t trees) {
  w.U8(static_cast<uint8_t>(kind));
  w.U32(n);
  w.U32(t);
  w.U32(frac_bits);
  w.U32(static_cast<uint32_t>(trees));
}

struct Shape {
  ModelKind kind;
  uint32_t n, t, frac_bits;
  size_t trees;
};

Shape ReadShape(ByteReader& r) {
  Shape s;
  uint8_t kind = r.U8();
  Require(kind <= 1, "unknown model kind");
  s.kind = static_cast<ModelKind>(kind);
  s.n = r.U32();
  s.t = r.U32();
  s.frac_bits = r.U32();
  Require(s.n >= 1, "n must be positive");
  Require(s.t >= 1 && s.t <= 32, "t out of range");
  Require(s.frac_bits <= 62, "frac_bits out of range");
  s.trees = r.Count(1);
  Require(s.trees >= 1, "no trees");
  Require(s.kind == ModelKind::kGbdt || s.trees == 1, "single-tree model with several trees");
  return s;
}

uint32_t ReadHeight(ByteReader& r) {
  uint32_t h = r.U8();
  Require(h >= 1 && h <= kMaxTreeHeight, "height out of range");
  return h;
}

}  // namespace

std::vector<uint8_t> EncodeModel(const PublicKey& pk, const EncryptedModel& model) {
  model.Validate();
  const HssParams& p = pk.params;
  ByteWriter w;
  Header(w, "HSMD");
  WriteShape(w, model.kind, model.n, model.t, model.frac_bits, model.trees.size());
  for (const auto& tree : model.trees) {
    w.U8(static_cast<uint8_t>(tree.h));
    for (size_t j = 0; j < tree.m(); ++j) {
      w.U8(static_cast<uint8_t>(tree.kinds[j]));
      if (tree.kinds[j] == TestKind::kThreshold) {
        WriteCts(w, p, tree.thresholds[j]);
      } else {
        w.U32(static_cast<uint32_t>(tree.member_sets[j].size()));
        for (const auto& e : tree.member_sets[j]) WriteCts(w, p, e);
      }
    }
    WriteCts(w, p, tree.labels);
    for (const auto& row : tree.feature_map) WriteCts(w, p, row);
  }
  if (model.kind == ModelKind::kGbdt) {
    WriteCiphertext(w, p, *model.eta);
    WriteCiphertext(w, p, *model.t0);
  }
  return w.Take();
}

EncryptedModel DecodeModel(const PublicKey& pk, std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectHeader(r, "HSMD");
  Shape s = ReadShape(r);
  EncryptedModel model;
  model.kind = s.kind;
  model.n = s.n;
  model.t = s.t;
  model.frac_bits = s.frac_bits;
  size_t ct = pk.params.CiphertextBytes();
  for (size_t j = 0; j < s.trees; ++j) {
    EncryptedTree tree;
    tree.h = ReadHeight(r);
    size_t m = (size_t{1} << tree.h) - 1;
    for (size_t i = 0; i < m; ++i) {
      uint8_t kind = r.U8();
      Require(kind <= 1, "unknown node kind");
      tree.kinds.push_back(static_cast<TestKind>(kind));
      if (kind == 0) {
        tree.thresholds.push_back(ReadCts(r, pk, s.t));
        tree.member_sets.emplace_back();
      } else {
        tree.thresholds.emplace_back();
        size_t count = r.Count(ct * s.t);
        std::vector<BitCiphertexts> set;
        for (size_t e = 0; e < count; ++e) set.push_back(ReadCts(r, pk, s.t));
        tree.member_sets.push_back(std::move(set));
      }
    }
    tree.labels = ReadCts(r, pk, m + 1);
    Require(r.remaining() / ct / s.n >= m, "truncated feature map");
    for (size_t i = 0; i < m; ++i) tree.feature_map.push_back(ReadCts(r, pk, s.n));
    model.trees.push_back(std::move(tree));
  }
  if (s.kind == ModelKind::kGbdt) {
    model.eta = ReadCiphertext(r, pk);
    model.t0 = ReadCiphertext(r, pk);
  }
  r.ExpectEnd();
  return model;
}

std::vector<uint8_t> EncodeClientView(const PublicKey& pk, const ClientModelView& view) {
  ByteWriter w;
  Header(w, "HSCV");
  WriteShape(w, view.kind, view.n, view.t, view.frac_bits, view.heights.size());
  for (size_t j = 0; j < view.heights.size(); ++j) {
    w.U8(static_cast<uint8_t>(view.heights[j]));
    for (const auto& row : view.feature_maps[j]) WriteCts(w, pk.params, row);
  }
  return w.Take();
}

ClientModelView DecodeClientView(const PublicKey& pk, std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectHeader(r, "HSCV");
  Shape s = ReadShape(r);
  ClientModelView view;
  view.kind = s.kind;
  view.n = s.n;
  view.t = s.t;
  view.frac_bits = s.frac_bits;
  size_t ct = pk.params.CiphertextBytes();
  for (size_t j = 0; j < s.trees; ++j) {
    uint32_t h = ReadHeight(r);
    size_t m = (size_t{1} << h) - 1;
    Require(r.remaining() / ct / s.n >= m, "truncated feature map");
    std::vector<std::vector<Ciphertext>> map;
    for (size_t i = 0; i < m; ++i) map.push_back(ReadCts(r, pk, s.n));
    view.heights.push_back(h);
    view.feature_maps.push_back(std::move(map));
  }
  r.ExpectEnd();
  return view;
}

std::vector<uint8_t> EncodeQuery(const PublicKey& pk, const ClientQuery& query) {
  ByteWriter w;
  Header(w, "HSQY");
  w.Bytes(query.nonce);
  w.U32(static_cast<uint32_t>(query.selected.size()));
  for (const auto& rows : query.selected) {
    w.U32(static_cast<uint32_t>(rows.size()));
    w.U32(rows.empty() ? 0 : static_cast<uint32_t>(rows.front().size()));
    for (const auto& row : rows) {
      if (row.size() != rows.front().size()) {
        Fail(ErrorCode::kProtocolMisuse, "ragged query rows");
      }
      WriteCts(w, pk.params, row);
    }
  }
  WriteCiphertext(w, pk.params, query.mac_key);
  return w.Take();
}

ClientQuery DecodeQuery(const PublicKey& pk, std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectHeader(r, "HSQY");
  ClientQuery q;
  auto nonce = r.Bytes(q.nonce.size());
  std::copy(nonce.begin(), nonce.end(), q.nonce.begin());
  size_t ct = pk.params.CiphertextBytes();
  size_t trees = r.Count(8);
  Require(trees >= 1, "query without trees");
  for (size_t j = 0; j < trees; ++j) {
    uint32_t m = r.U32();
    uint32_t t = r.U32();
    Require(m >= 1 && t >= 1 && t <= 32, "query shape out of range");
    Require(r.remaining() / ct / t >= m, "truncated query");
    std::vector<BitCiphertexts> rows;
    for (uint32_t i = 0; i < m; ++i) rows.push_back(ReadCts(r, pk, t));
    q.selected.push_back(std::move(rows));
  }
  q.mac_key = ReadCiphertext(r, pk);
  r.ExpectEnd();
  return q;
}

std::vector<uint8_t> EncodeResponse(const PublicKey& pk, const ServerResponse& resp) {
  const HssParams& p = pk.params;
  ByteWriter w;
  Header(w, "HSRS");
  w.U8(resp.sigma);
  w.U8(static_cast<uint8_t>(resp.mode));
  w.U32(static_cast<uint32_t>(resp.trees.size()));
  for (const auto& leaves : resp.trees) {
    w.U32(static_cast<uint32_t>(leaves.size()));
    for (const auto& s : leaves) {
      WriteShare(w, p, s.pc);
      WriteShare(w, p, s.value);
      if (resp.mode != EvalMode::kPlain) WriteShare(w, p, s.proof);
    }
  }
  if (resp.mode == EvalMode::kGbdt) {
    WriteShare(w, p, resp.t0);
    WriteShare(w, p, resp.t0_proof);
  }
  return w.Take();
}

ServerResponse DecodeResponse(const PublicKey& pk, std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectHeader(r, "HSRS");
  ServerResponse resp;
  resp.sigma = r.U8();
  Require(resp.sigma <= 1, "sigma out of range");
  uint8_t mode = r.U8();
  Require(mode <= 2, "unknown evaluation mode");
  resp.mode = static_cast<EvalMode>(mode);
  size_t per_leaf = pk.params.ShareBytes() * (resp.mode == EvalMode::kPlain ? 2 : 3);
  size_t trees = r.Count(4);
  for (size_t j = 0; j < trees; ++j) {
    size_t k = r.Count(per_leaf);
    std::vector<LeafShares> leaves(k);
    for (auto& s : leaves) {
      s.pc = ReadShare(r, pk);
      s.value = ReadShare(r, pk);
      if (resp.mode != EvalMode::kPlain) s.proof = ReadShare(r, pk);
    }
    resp.trees.push_back(std::move(leaves));
  }
  if (resp.mode == EvalMode::kGbdt) {
    resp.t0 = ReadShare(r, pk);
    resp.t0_proof = ReadShare(r, pk);
  }
  r.ExpectEnd();
  return resp;
}

}  // namespace hssdt
