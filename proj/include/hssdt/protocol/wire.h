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

#ifndef HSSDT_PROTOCOL_WIRE_H_
#define HSSDT_PROTOCOL_WIRE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "hssdt/hss/keys.h"
#include "hssdt/protocol/messages.h"

// Binary codecs. Each object starts with a 4-byte tag and a version byte;
// ciphertexts and shares are fixed width for the key's profile. Decoders
// throw kDecode on any malformed, truncated or trailing input.
namespace hssdt {

inline constexpr uint8_t kWireVersion = 1;

std::vector<uint8_t> EncodeModel(const PublicKey& pk, const EncryptedModel& model);
EncryptedModel DecodeModel(const PublicKey& pk, std::span<const uint8_t> bytes);

std::vector<uint8_t> EncodeClientView(const PublicKey& pk, const ClientModelView& view);
ClientModelView DecodeClientView(const PublicKey& pk, std::span<const uint8_t> bytes);

std::vector<uint8_t> EncodeQuery(const PublicKey& pk, const ClientQuery& query);
ClientQuery DecodeQuery(const PublicKey& pk, std::span<const uint8_t> bytes);

std::vector<uint8_t> EncodeResponse(const PublicKey& pk, const ServerResponse& response);
ServerResponse DecodeResponse(const PublicKey& pk, std::span<const uint8_t> bytes);

}  // namespace hssdt

#endif  // HSSDT_PROTOCOL_WIRE_H_
