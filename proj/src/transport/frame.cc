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

#include "hssdt/transport/frame.h"

#include <cstring>

#include "hssdt/common/bytes.h"

namespace hssdt {
namespace {

constexpr uint8_t kMagic[4] = {'H', 'S', 'D', 'T'};

bool KnownType(uint8_t t) { return t >= 0x01 && t <= 0x05; }

}  // namespace

const char* MsgTypeName(MsgType type) {
  switch (type) {
    case MsgType::kModelUpload:
      return "model-upload";
    case MsgType::kQuery:
      return "query";
    case MsgType::kResponse:
      return "response";
    case MsgType::kError:
      return "error";
    case MsgType::kPing:
      return "ping";
  }
  return "unknown";
}

std::vector<uint8_t> EncodeFrame(const Frame& frame) {
  ByteWriter w;
  w.Bytes(kMagic);
  w.U8(kFrameVersion);
  w.U8(static_cast<uint8_t>(frame.type));
  w.U64(frame.payload.size());
  w.Bytes(frame.payload);
  return w.Take();
}

FrameHeader DecodeFrameHeader(std::span<const uint8_t> header, uint64_t max_payload) {
  ByteReader r(header);
  auto magic = r.Bytes(4);
  if (std::memcmp(magic.data(), kMagic, 4) != 0) Fail(ErrorCode::kDecode, "bad frame magic");
  uint8_t version = r.U8();
  if (version != kFrameVersion) {
    Fail(ErrorCode::kDecode, "unsupported frame version " + std::to_string(version));
  }
  uint8_t type = r.U8();
  if (!KnownType(type)) Fail(ErrorCode::kDecode, "unknown message type " + std::to_string(type));
  uint64_t length = r.U64();
  if (length > max_payload) Fail(ErrorCode::kDecode, "frame length exceeds limit");
  return {static_cast<MsgType>(type), length};
}

Frame DecodeFrame(std::span<const uint8_t> bytes, uint64_t max_payload) {
  if (bytes.size() < kFrameHeaderBytes) Fail(ErrorCode::kDecode, "truncated frame header");
  FrameHeader h = DecodeFrameHeader(bytes.first(kFrameHeaderBytes), max_payload);
  auto rest = bytes.subspan(kFrameHeaderBytes);
  if (rest.size() != h.length) Fail(ErrorCode::kDecode, "frame length does not match payload");
  return {h.type, {rest.begin(), rest.end()}};
}

std::vector<uint8_t> EncodeQueryEnvelope(const QueryEnvelope& env) {
  ByteWriter w;
  w.String(env.model_id);
  w.U8(static_cast<uint8_t>(env.mode));
  w.LengthPrefixed(env.query);
  return w.Take();
}

QueryEnvelope DecodeQueryEnvelope(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  QueryEnvelope env;
  env.model_id = r.String();
  uint8_t mode = r.U8();
  if (mode > 2) Fail(ErrorCode::kDecode, "unknown evaluation mode");
  env.mode = static_cast<EvalMode>(mode);
  env.query = r.LengthPrefixed();
  r.ExpectEnd();
  return env;
}

std::vector<uint8_t> EncodeErrorPayload(const ErrorPayload& e) {
  ByteWriter w;
  w.U16(static_cast<uint16_t>(e.code));
  w.String(e.message);
  return w.Take();
}

ErrorPayload DecodeErrorPayload(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  ErrorPayload e;
  uint16_t code = r.U16();
  if (code < 1 || code > 11) Fail(ErrorCode::kDecode, "unknown error code");
  e.code = static_cast<ErrorCode>(code);
  e.message = r.String();
  r.ExpectEnd();
  return e;
}

Frame ErrorFrame(ErrorCode code, const std::string& message) {
  return {MsgType::kError, EncodeErrorPayload({code, message})};
}

void ExpectFrame(const Frame& frame, MsgType expected) {
  if (frame.type == MsgType::kError && expected != MsgType::kError) {
    ErrorPayload e = DecodeErrorPayload(frame.payload);
    throw Error(e.code, "server error: " + e.message);
  }
  if (frame.type != expected) {
    Fail(ErrorCode::kProtocol, std::string("expected ") + MsgTypeName(expected) +
                                   " frame, got " + MsgTypeName(frame.type));
  }
}

}  // namespace hssdt
