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

#include "hssdt/hss/keys.h"

#include <vector>

#include "hssdt/common/errors.h"

namespace hssdt {
namespace {

constexpr uint32_t kSieveLimit = 1 << 16;
constexpr size_t kWindow = 1 << 15;

const std::vector<uint32_t>& SmallOddPrimes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 3; i < kSieveLimit; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t{i} * i; j < kSieveLimit; j += 2 * i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

BigInt OnePlusNPow(const BigInt& x, const BigInt& n, const BigInt& n2) {
  // (1+N)^x = 1 + xN mod N^2.
  BigInt v = Mod(x, n) * n + 1;
  return Mod(v, n2);
}

BigInt MulMod(const BigInt& a, const BigInt& b, const BigInt& m) {
  BigInt r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

BigInt GenerateSafePrime(size_t bits, RandomSource& rng, size_t max_windows) {
  if (bits < 16) Fail(ErrorCode::kDomain, "safe prime size too small");
  const auto& primes = SmallOddPrimes();
  std::vector<uint8_t> bad(kWindow);
  for (size_t attempt = 0; attempt < max_windows; ++attempt) {
    // Sophie Germain candidate q of bits-1 bits, top two bits set, odd.
    BigInt q0 = rng.Bits(bits - 1);
    mpz_setbit(q0.get_mpz_t(), bits - 2);
    mpz_setbit(q0.get_mpz_t(), bits - 3);
    mpz_setbit(q0.get_mpz_t(), 0);
    // Candidate k is q0 + 2k; drop it if s divides q or 2q+1.
    std::fill(bad.begin(), bad.end(), 0);
    for (uint32_t s : primes) {
      if (s >= q0) break;
      uint64_t r = mpz_fdiv_ui(q0.get_mpz_t(), s);
      uint64_t inv2 = (s + 1) / 2;
      // q0 + 2k = 0 (mod s)  =>  k = -r/2
      uint64_t k1 = ((s - r) % s) * inv2 % s;
      // q0 + 2k = (s-1)/2 (mod s)  =>  2q+1 = 0
      uint64_t target = (s - 1) / 2;
      uint64_t k2 = ((target + s - r) % s) * inv2 % s;
      for (uint64_t k = k1; k < kWindow; k += s) bad[k] = 1;
      for (uint64_t k = k2; k < kWindow; k += s) bad[k] = 1;
    }
    for (size_t k = 0; k < kWindow; ++k) {
      if (bad[k]) continue;
      BigInt q = q0 + 2 * static_cast<unsigned long>(k);
      if (mpz_sizeinbase(q.get_mpz_t(), 2) != bits - 1) break;
      BigInt p = 2 * q + 1;
      // Cheap Fermat filter on p first; most survivors die here.
      BigInt two = 2, fermat;
      BigInt pm1 = p - 1;
      mpz_powm(fermat.get_mpz_t(), two.get_mpz_t(), pm1.get_mpz_t(), p.get_mpz_t());
      if (fermat != 1) continue;
      if (mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) continue;
      if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) continue;
      return p;
    }
  }
  Fail(ErrorCode::kSetupFailure,
       "no safe prime of " + std::to_string(bits) + " bits found");
}

KeySet Setup(const HssParams& params, RandomSource& rng) {
  params.Validate();
  size_t half = params.modulus_bits / 2;
  BigInt p = GenerateSafePrime(half, rng);
  BigInt q;
  for (int i = 0; i < 8; ++i) {
    q = GenerateSafePrime(half, rng);
    if (q != p) break;
  }
  if (q == p) Fail(ErrorCode::kSetupFailure, "could not draw distinct primes");
  return SetupWithPrimes(params, p, q, rng);
}

KeySet SetupWithPrimes(const HssParams& params, const BigInt& p, const BigInt& q,
                       RandomSource& rng) {
  params.Validate();
  if (p == q) Fail(ErrorCode::kSetupFailure, "primes must be distinct");
  KeySet ks;
  PublicKey& pk = ks.pk;
  pk.params = params;
  pk.n = p * q;
  if (mpz_sizeinbase(pk.n.get_mpz_t(), 2) != params.modulus_bits) {
    Fail(ErrorCode::kSetupFailure, "modulus has wrong bit length");
  }
  pk.n2 = pk.n * pk.n;

  // g = u^(2N): a square with no (1+N) component, so it lies in the
  // subgroup of order p'q'.
  BigInt u;
  do {
    u = rng.Range(2, pk.n);
  } while (gcd(u, pk.n) != 1);
  pk.g = PowMod(u, 2 * pk.n, pk.n2);

  BigInt d = rng.Range(1, BigInt(1) << params.key_bits);
  pk.h = PowMod(pk.g, d, pk.n2);
  BigInt r = rng.Bits(params.modulus_bits);
  pk.enc_of_d.c0 = PowMod(pk.g, r, pk.n2);
  pk.enc_of_d.c1 =
      MulMod(PowMod(pk.h, r, pk.n2), OnePlusNPow(d, pk.n, pk.n2), pk.n2);

  // d_share0 + d stays below N, so the two shares differ by exactly d as
  // integers.
  BigInt span = pk.n - (BigInt(1) << params.key_bits);
  BigInt d0 = rng.Below(span);
  PrfKey k_prf;
  rng.Fill(k_prf);
  ks.ek[0] = EvalKey{0, d0, k_prf};
  ks.ek[1] = EvalKey{1, d0 + d, k_prf};
  if (params.key_escrow) ks.escrow = KeyEscrow{d, p, q};
  return ks;
}

Encryptor::Encryptor(const PublicKey& pk)
    : pk_(std::make_shared<const PublicKey>(pk)),
      g_table_(pk.g, pk.n2, pk.params.modulus_bits),
      h_table_(pk.h, pk.n2, pk.params.modulus_bits),
      ed0_table_(pk.enc_of_d.c0, pk.n2, pk.params.modulus_bits),
      ed1_table_(pk.enc_of_d.c1, pk.n2, pk.params.modulus_bits) {}

GroupPair Encryptor::ZeroPair(RandomSource& rng) const {
  BigInt r = rng.Bits(pk_->params.modulus_bits);
  return {g_table_.Pow(r), h_table_.Pow(r)};
}

GroupPair Encryptor::EncryptPair(const BigInt& x, RandomSource& rng) const {
  if (sgn(x) < 0 || x >= pk_->n) {
    Fail(ErrorCode::kDomain, "plaintext outside [0, N)");
  }
  GroupPair out = ZeroPair(rng);
  out.c1 = MulMod(out.c1, OnePlusNPow(x, pk_->n, pk_->n2), pk_->n2);
  return out;
}

Ciphertext Encryptor::Encrypt(const BigInt& x, RandomSource& rng) const {
  Ciphertext c;
  c.main = EncryptPair(x, rng);
  // Companion: enc_of_d^x times a fresh encryption of zero.
  c.companion = ZeroPair(rng);
  if (sgn(x) != 0) {
    const BigInt& n2 = pk_->n2;
    c.companion.c0 = MulMod(c.companion.c0, ed0_table_.Pow(x), n2);
    c.companion.c1 = MulMod(c.companion.c1, ed1_table_.Pow(x), n2);
  }
  return c;
}

Ciphertext Encryptor::Encrypt(int64_t x, RandomSource& rng) const {
  return Encrypt(FromInt64(x), rng);
}

Ciphertext Encryptor::EncryptSigned(const BigInt& x, RandomSource& rng) const {
  return Encrypt(Mod(x, pk_->n), rng);
}

Ciphertext Encryptor::Rerandomize(const Ciphertext& c, RandomSource& rng) const {
  const BigInt& n2 = pk_->n2;
  GroupPair z0 = ZeroPair(rng);
  GroupPair z1 = ZeroPair(rng);
  return {{MulMod(c.main.c0, z0.c0, n2), MulMod(c.main.c1, z0.c1, n2)},
          {MulMod(c.companion.c0, z1.c0, n2),
           MulMod(c.companion.c1, z1.c1, n2)}};
}

Ciphertext AddCiphertexts(const PublicKey& pk, const Ciphertext& a,
                          const Ciphertext& b) {
  const BigInt& n2 = pk.n2;
  return {{MulMod(a.main.c0, b.main.c0, n2), MulMod(a.main.c1, b.main.c1, n2)},
          {MulMod(a.companion.c0, b.companion.c0, n2),
           MulMod(a.companion.c1, b.companion.c1, n2)}};
}

BigInt DecryptPair(const PublicKey& pk, const BigInt& d, const GroupPair& pair) {
  BigInt v = MulMod(pair.c1, PowMod(pair.c0, -d, pk.n2), pk.n2);
  BigInt low = Mod(v, pk.n);
  if (low != 1) Fail(ErrorCode::kDecode, "pair is not a valid encryption");
  return (v - 1) / pk.n;
}

BigInt Decrypt(const PublicKey& pk, const KeyEscrow& escrow, const Ciphertext& c) {
  BigInt x = DecryptPair(pk, escrow.d, c.main);
  BigInt dx = DecryptPair(pk, escrow.d, c.companion);
  if (dx != Mod(escrow.d * x, pk.n)) {
    Fail(ErrorCode::kDecode, "companion does not encode d times the plaintext");
  }
  return x;
}

}  // namespace hssdt
