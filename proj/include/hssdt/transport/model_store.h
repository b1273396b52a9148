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

#ifndef HSSDT_TRANSPORT_MODEL_STORE_H_
#define HSSDT_TRANSPORT_MODEL_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "hssdt/hss/keys.h"
#include "hssdt/protocol/messages.h"

namespace hssdt {

// Content-addressed blobs (id = hex SHA-256 of the payload). With a root
// directory, models live in <root>/models/<id>.hsdt and keys in
// <root>/keys/<id>.hsdt, each wrapped in a frame. Concurrent readers,
// exclusive writers.
class ModelStore {
 public:
  // Empty root: memory only.
  explicit ModelStore(std::filesystem::path root = {});

  static std::string ContentId(std::span<const uint8_t> payload);

  std::string PutModel(std::span<const uint8_t> encoded_model);
  // Throws kUnknownModel for ids that are absent or not well formed.
  std::vector<uint8_t> ModelBytes(const std::string& id) const;
  bool HasModel(const std::string& id) const;
  // Decoded model, cached after the first call.
  std::shared_ptr<const EncryptedModel> Model(const PublicKey& pk, const std::string& id);

  std::string PutKey(std::span<const uint8_t> encoded_key);
  std::vector<uint8_t> KeyBytes(const std::string& id) const;

 private:
  std::string Put(const char* dir, std::map<std::string, std::vector<uint8_t>>& blobs,
                  std::span<const uint8_t> payload);
  std::vector<uint8_t> Get(const char* dir,
                           const std::map<std::string, std::vector<uint8_t>>& blobs,
                           const std::string& id) const;

  std::filesystem::path root_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::vector<uint8_t>> models_;
  std::map<std::string, std::vector<uint8_t>> keys_;
  std::map<std::string, std::shared_ptr<const EncryptedModel>> decoded_;
};

// Whole-file helpers; throw kIo.
std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path);
// Writes to a temporary sibling and renames into place.
void WriteFileBytes(const std::filesystem::path& path, std::span<const uint8_t> bytes);

}  // namespace hssdt

#endif  // HSSDT_TRANSPORT_MODEL_STORE_H_
