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

#include "hssdt/common/errors.h"

namespace hssdt {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain:
      return "domain-error";
    case ErrorCode::kSetupFailure:
      return "setup-failure";
    case ErrorCode::kConversion:
      return "conversion-error";
    case ErrorCode::kDecode:
      return "decode-error";
    case ErrorCode::kProtocolMisuse:
      return "protocol-misuse";
    case ErrorCode::kUnsupportedModulus:
      return "unsupported-modulus";
    case ErrorCode::kIngestion:
      return "ingestion-error";
    case ErrorCode::kProtocol:
      return "protocol-error";
    case ErrorCode::kTransport:
      return "transport-error";
    case ErrorCode::kIo:
      return "io-error";
    case ErrorCode::kUnknownModel:
      return "unknown-model";
  }
  return "unknown-error";
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(ErrorCodeName(code)) + ": " + message);
}

}  // namespace hssdt
