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

#include "hssdt/transport/model_store.h"

#include <fstream>
#include <iterator>
#include <mutex>

#include "hssdt/common/errors.h"
#include "hssdt/common/hash.h"
#include "hssdt/protocol/wire.h"
#include "hssdt/transport/frame.h"

namespace hssdt {
namespace {

bool WellFormedId(const std::string& id) {
  if (id.size() != 64) return false;
  for (char c : id) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

}  // namespace

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  if (in.bad()) Fail(ErrorCode::kIo, "cannot read " + path.string());
  return data;
}

void WriteFileBytes(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) Fail(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) Fail(ErrorCode::kIo, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot rename " + tmp.string() + ": " + ec.message());
}

ModelStore::ModelStore(std::filesystem::path root) : root_(std::move(root)) {}

std::string ModelStore::ContentId(std::span<const uint8_t> payload) {
  return HexString(Sha256(payload));
}

std::string ModelStore::Put(const char* dir,
                            std::map<std::string, std::vector<uint8_t>>& blobs,
                            std::span<const uint8_t> payload) {
  std::string id = ContentId(payload);
  std::unique_lock lock(mu_);
  if (!root_.empty()) {
    auto framed = EncodeFrame({MsgType::kModelUpload, {payload.begin(), payload.end()}});
    WriteFileBytes(root_ / dir / (id + ".hsdt"), framed);
  }
  blobs[id].assign(payload.begin(), payload.end());
  return id;
}

std::vector<uint8_t> ModelStore::Get(const char* dir,
                                     const std::map<std::string, std::vector<uint8_t>>& blobs,
                                     const std::string& id) const {
  if (!WellFormedId(id)) Fail(ErrorCode::kUnknownModel, "malformed id '" + id + "'");
  {
    std::shared_lock lock(mu_);
    auto it = blobs.find(id);
    if (it != blobs.end()) return it->second;
  }
  if (!root_.empty()) {
    auto path = root_ / dir / (id + ".hsdt");
    if (std::filesystem::exists(path)) {
      Frame f = DecodeFrame(ReadFileBytes(path));
      if (ContentId(f.payload) != id) Fail(ErrorCode::kIo, "stored blob does not match its id");
      return f.payload;
    }
  }
  Fail(ErrorCode::kUnknownModel, "unknown id " + id);
}

std::string ModelStore::PutModel(std::span<const uint8_t> encoded_model) {
  return Put("models", models_, encoded_model);
}

std::vector<uint8_t> ModelStore::ModelBytes(const std::string& id) const {
  return Get("models", models_, id);
}

bool ModelStore::HasModel(const std::string& id) const {
  try {
    ModelBytes(id);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::shared_ptr<const EncryptedModel> ModelStore::Model(const PublicKey& pk,
                                                        const std::string& id) {
  {
    std::shared_lock lock(mu_);
    auto it = decoded_.find(id);
    if (it != decoded_.end()) return it->second;
  }
  auto model = std::make_shared<const EncryptedModel>(DecodeModel(pk, ModelBytes(id)));
  std::unique_lock lock(mu_);
  return decoded_.emplace(id, std::move(model)).first->second;
}

std::string ModelStore::PutKey(std::span<const uint8_t> encoded_key) {
  return Put("keys", keys_, encoded_key);
}

std::vector<uint8_t> ModelStore::KeyBytes(const std::string& id) const {
  return Get("keys", keys_, id);
}

}  // namespace hssdt
