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

#include "hssdt/hss/params.h"

#include "hssdt/common/errors.h"

namespace hssdt {

std::string ProfileName(Profile p) {
  return p == Profile::kTest ? "test" : "default";
}

Profile ParseProfile(const std::string& name) {
  if (name == "test") return Profile::kTest;
  if (name == "default") return Profile::kDefault;
  Fail(ErrorCode::kDomain, "unknown profile '" + name + "'");
}

HssParams HssParams::Test() {
  HssParams p;
  p.profile = Profile::kTest;
  p.security_bits = 64;
  p.modulus_bits = 512;
  p.key_bits = 128;
  p.key_escrow = true;
  return p;
}

HssParams HssParams::Default() { return HssParams{}; }

HssParams HssParams::ForProfile(Profile p) {
  return p == Profile::kTest ? Test() : Default();
}

void HssParams::Validate() const {
  if (t_bits < 1 || t_bits > 32) {
    Fail(ErrorCode::kDomain, "t_bits must be in [1, 32]");
  }
  if (modulus_bits % 2 != 0 || modulus_bits < 256) {
    Fail(ErrorCode::kDomain, "modulus_bits must be even and at least 256");
  }
  if (modulus_bits < 2 * security_bits) {
    Fail(ErrorCode::kDomain, "modulus_bits below 2*security_bits");
  }
  if (key_bits < 2 * security_bits) {
    Fail(ErrorCode::kDomain, "key_bits below 2*security_bits");
  }
  if (modulus_bits < key_bits + 2 * security_bits + 64) {
    Fail(ErrorCode::kDomain,
         "modulus too small for exact share conversion with this key size");
  }
  if (profile == Profile::kDefault && key_escrow) {
    Fail(ErrorCode::kDomain, "key escrow is only allowed in the test profile");
  }
}

bool operator==(const HssParams& a, const HssParams& b) {
  return a.profile == b.profile && a.security_bits == b.security_bits &&
         a.modulus_bits == b.modulus_bits && a.t_bits == b.t_bits &&
         a.key_bits == b.key_bits && a.key_escrow == b.key_escrow;
}

}  // namespace hssdt
