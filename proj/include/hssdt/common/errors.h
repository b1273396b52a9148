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

#ifndef HSSDT_COMMON_ERRORS_H_
#define HSSDT_COMMON_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hssdt {

// Error categories surfaced by the library. Values are stable because the
// transport layer puts them on the wire inside Error frames.
enum class ErrorCode : uint16_t {
  kDomain = 1,
  kSetupFailure = 2,
  kConversion = 3,
  kDecode = 4,
  kProtocolMisuse = 5,
  kUnsupportedModulus = 6,
  kIngestion = 7,
  kProtocol = 8,
  kTransport = 9,
  kIo = 10,
  kUnknownModel = 11,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace hssdt

#endif  // HSSDT_COMMON_ERRORS_H_
