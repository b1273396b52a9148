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

#ifndef HSSDT_TRANSPORT_FRAME_H_
#define HSSDT_TRANSPORT_FRAME_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hssdt/common/errors.h"
#include "hssdt/protocol/messages.h"

namespace hssdt {

// Frame: "HSDT" | version u8 | type u8 | length u64 BE | payload.
enum class MsgType : uint8_t {
  kModelUpload = 0x01,
  kQuery = 0x02,
  kResponse = 0x03,
  kError = 0x04,
  kPing = 0x05,
};

inline constexpr uint8_t kFrameVersion = 1;
inline constexpr size_t kFrameHeaderBytes = 14;
inline constexpr uint64_t kDefaultMaxPayload = uint64_t{1} << 32;

const char* MsgTypeName(MsgType type);

struct Frame {
  MsgType type = MsgType::kPing;
  std::vector<uint8_t> payload;
  bool operator==(const Frame&) const = default;
};

struct FrameHeader {
  MsgType type;
  uint64_t length;
};

std::vector<uint8_t> EncodeFrame(const Frame& frame);
// Throws kDecode on bad magic, version or type, or a length above
// max_payload.
FrameHeader DecodeFrameHeader(std::span<const uint8_t> header,
                              uint64_t max_payload = kDefaultMaxPayload);
// Whole frame; the length must match the remaining bytes exactly.
Frame DecodeFrame(std::span<const uint8_t> bytes,
                  uint64_t max_payload = kDefaultMaxPayload);

// Query payload: model id, mode and the encoded ClientQuery.
struct QueryEnvelope {
  std::string model_id;
  EvalMode mode = EvalMode::kPlain;
  std::vector<uint8_t> query;
  bool operator==(const QueryEnvelope&) const = default;
};
std::vector<uint8_t> EncodeQueryEnvelope(const QueryEnvelope& env);
QueryEnvelope DecodeQueryEnvelope(std::span<const uint8_t> bytes);

struct ErrorPayload {
  ErrorCode code = ErrorCode::kProtocol;
  std::string message;
  bool operator==(const ErrorPayload&) const = default;
};
std::vector<uint8_t> EncodeErrorPayload(const ErrorPayload& e);
ErrorPayload DecodeErrorPayload(std::span<const uint8_t> bytes);

Frame ErrorFrame(ErrorCode code, const std::string& message);
// Throws the carried error if `frame` is an Error frame, or kProtocol if it
// is not of the expected type.
void ExpectFrame(const Frame& frame, MsgType expected);

}  // namespace hssdt

#endif  // HSSDT_TRANSPORT_FRAME_H_
