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

#ifndef HSSDT_HSS_SERIALIZATION_H_
#define HSSDT_HSS_SERIALIZATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "hssdt/common/bytes.h"
#include "hssdt/hss/evaluator.h"
#include "hssdt/hss/keys.h"

namespace hssdt {

inline constexpr uint8_t kKeyFormatVersion = 1;

std::vector<uint8_t> EncodePublicKey(const PublicKey& pk);
PublicKey DecodePublicKey(std::span<const uint8_t> bytes);

std::vector<uint8_t> EncodeEvalKey(const EvalKey& ek);
EvalKey DecodeEvalKey(std::span<const uint8_t> bytes);

std::vector<uint8_t> EncodeKeyEscrow(const KeyEscrow& escrow);
KeyEscrow DecodeKeyEscrow(std::span<const uint8_t> bytes);

// Ciphertexts are four fixed-width elements, no header.
void WriteCiphertext(ByteWriter& w, const HssParams& params, const Ciphertext& c);
// Rejects elements outside [1, N^2) or sharing a factor with N.
Ciphertext ReadCiphertext(ByteReader& r, const PublicKey& pk);
std::vector<uint8_t> EncodeCiphertext(const HssParams& params, const Ciphertext& c);
Ciphertext DecodeCiphertext(std::span<const uint8_t> bytes, const PublicKey& pk);

void WriteShare(ByteWriter& w, const HssParams& params, const BigInt& value);
// Rejects values outside [0, N).
BigInt ReadShare(ByteReader& r, const PublicKey& pk);

}  // namespace hssdt

#endif  // HSSDT_HSS_SERIALIZATION_H_
