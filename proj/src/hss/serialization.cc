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

#include "hssdt/hss/serialization.h"

#include <array>
#include <cstring>

#include "hssdt/common/errors.h"

namespace hssdt {
namespace {

constexpr std::array<uint8_t, 4> kPkMagic = {'H', 'S', 'P', 'K'};
constexpr std::array<uint8_t, 4> kEkMagic = {'H', 'S', 'E', 'K'};
constexpr std::array<uint8_t, 4> kEscrowMagic = {'H', 'S', 'K', 'E'};

void WriteHeader(ByteWriter& w, const std::array<uint8_t, 4>& magic) {
  w.Bytes(magic);
  w.U8(kKeyFormatVersion);
}

void ReadHeader(ByteReader& r, const std::array<uint8_t, 4>& magic,
                const char* what) {
  auto m = r.Bytes(4);
  if (std::memcmp(m.data(), magic.data(), 4) != 0) {
    Fail(ErrorCode::kDecode, std::string("bad magic for ") + what);
  }
  uint8_t version = r.U8();
  if (version != kKeyFormatVersion) {
    Fail(ErrorCode::kDecode, std::string("unsupported version for ") + what);
  }
}

void WriteInt(ByteWriter& w, const BigInt& v) {
  size_t width = sgn(v) == 0 ? 0 : ByteWidth(mpz_sizeinbase(v.get_mpz_t(), 2));
  w.LengthPrefixed(ToFixedBytes(v, width));
}

BigInt ReadInt(ByteReader& r) {
  uint32_t n = r.U32();
  return FromBytes(r.Bytes(n));
}

void WriteElement(ByteWriter& w, const HssParams& params, const BigInt& v) {
  w.FixedBigInt(v, params.ElementBytes());
}

BigInt ReadElement(ByteReader& r, const PublicKey& pk) {
  BigInt v = r.FixedBigInt(pk.params.ElementBytes());
  if (sgn(v) <= 0 || v >= pk.n2) {
    Fail(ErrorCode::kDecode, "group element out of range");
  }
  if (gcd(v, pk.n) != 1) Fail(ErrorCode::kDecode, "group element is not a unit");
  return v;
}

}  // namespace

std::vector<uint8_t> EncodePublicKey(const PublicKey& pk) {
  ByteWriter w;
  WriteHeader(w, kPkMagic);
  const HssParams& p = pk.params;
  w.U8(static_cast<uint8_t>(p.profile));
  w.U32(static_cast<uint32_t>(p.security_bits));
  w.U32(static_cast<uint32_t>(p.modulus_bits));
  w.U32(static_cast<uint32_t>(p.t_bits));
  w.U32(static_cast<uint32_t>(p.key_bits));
  w.U8(p.key_escrow ? 1 : 0);
  WriteInt(w, pk.n);
  WriteElement(w, p, pk.g);
  WriteElement(w, p, pk.h);
  WriteElement(w, p, pk.enc_of_d.c0);
  WriteElement(w, p, pk.enc_of_d.c1);
  return w.Take();
}

PublicKey DecodePublicKey(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  ReadHeader(r, kPkMagic, "public key");
  PublicKey pk;
  HssParams& p = pk.params;
  uint8_t profile = r.U8();
  if (profile > 1) Fail(ErrorCode::kDecode, "unknown profile tag");
  p.profile = static_cast<Profile>(profile);
  p.security_bits = r.U32();
  p.modulus_bits = r.U32();
  p.t_bits = r.U32();
  p.key_bits = r.U32();
  p.key_escrow = r.U8() != 0;
  try {
    p.Validate();
  } catch (const Error& e) {
    Fail(ErrorCode::kDecode, std::string("invalid key parameters: ") + e.what());
  }
  pk.n = ReadInt(r);
  if (mpz_sizeinbase(pk.n.get_mpz_t(), 2) != p.modulus_bits) {
    Fail(ErrorCode::kDecode, "modulus length does not match parameters");
  }
  pk.n2 = pk.n * pk.n;
  pk.g = ReadElement(r, pk);
  pk.h = ReadElement(r, pk);
  pk.enc_of_d.c0 = ReadElement(r, pk);
  pk.enc_of_d.c1 = ReadElement(r, pk);
  r.ExpectEnd();
  return pk;
}

std::vector<uint8_t> EncodeEvalKey(const EvalKey& ek) {
  ByteWriter w;
  WriteHeader(w, kEkMagic);
  w.U8(ek.sigma);
  WriteInt(w, ek.d_share);
  w.LengthPrefixed(ek.k_prf);
  return w.Take();
}

EvalKey DecodeEvalKey(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  ReadHeader(r, kEkMagic, "evaluation key");
  EvalKey ek;
  ek.sigma = r.U8();
  if (ek.sigma > 1) Fail(ErrorCode::kDecode, "sigma must be 0 or 1");
  ek.d_share = ReadInt(r);
  auto prf = r.LengthPrefixed();
  if (prf.size() != ek.k_prf.size()) Fail(ErrorCode::kDecode, "bad PRF key size");
  std::copy(prf.begin(), prf.end(), ek.k_prf.begin());
  r.ExpectEnd();
  return ek;
}

std::vector<uint8_t> EncodeKeyEscrow(const KeyEscrow& escrow) {
  ByteWriter w;
  WriteHeader(w, kEscrowMagic);
  WriteInt(w, escrow.d);
  WriteInt(w, escrow.p);
  WriteInt(w, escrow.q);
  return w.Take();
}

KeyEscrow DecodeKeyEscrow(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  ReadHeader(r, kEscrowMagic, "key escrow");
  KeyEscrow e;
  e.d = ReadInt(r);
  e.p = ReadInt(r);
  e.q = ReadInt(r);
  r.ExpectEnd();
  return e;
}

void WriteCiphertext(ByteWriter& w, const HssParams& params, const Ciphertext& c) {
  WriteElement(w, params, c.main.c0);
  WriteElement(w, params, c.main.c1);
  WriteElement(w, params, c.companion.c0);
  WriteElement(w, params, c.companion.c1);
}

Ciphertext ReadCiphertext(ByteReader& r, const PublicKey& pk) {
  Ciphertext c;
  c.main.c0 = ReadElement(r, pk);
  c.main.c1 = ReadElement(r, pk);
  c.companion.c0 = ReadElement(r, pk);
  c.companion.c1 = ReadElement(r, pk);
  return c;
}

std::vector<uint8_t> EncodeCiphertext(const HssParams& params, const Ciphertext& c) {
  ByteWriter w;
  WriteCiphertext(w, params, c);
  return w.Take();
}

Ciphertext DecodeCiphertext(std::span<const uint8_t> bytes, const PublicKey& pk) {
  ByteReader r(bytes);
  Ciphertext c = ReadCiphertext(r, pk);
  r.ExpectEnd();
  return c;
}

void WriteShare(ByteWriter& w, const HssParams& params, const BigInt& value) {
  w.FixedBigInt(value, params.ShareBytes());
}

BigInt ReadShare(ByteReader& r, const PublicKey& pk) {
  BigInt v = r.FixedBigInt(pk.params.ShareBytes());
  if (v >= pk.n) Fail(ErrorCode::kDecode, "share out of range");
  return v;
}

}  // namespace hssdt
