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

#ifndef HSSDT_HSS_KEYS_H_
#define HSSDT_HSS_KEYS_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>

#include "hssdt/common/bigint.h"
#include "hssdt/common/random.h"
#include "hssdt/hss/fixed_base.h"
#include "hssdt/hss/params.h"

namespace hssdt {

// (g^r, h^r * (1+N)^x) mod N^2.
struct GroupPair {
  BigInt c0;
  BigInt c1;
  bool operator==(const GroupPair&) const = default;
};

// `main` encodes x, `companion` encodes d*x.
struct Ciphertext {
  GroupPair main;
  GroupPair companion;
  bool operator==(const Ciphertext&) const = default;
};

struct PublicKey {
  HssParams params;
  BigInt n;
  BigInt n2;
  BigInt g;
  BigInt h;
  GroupPair enc_of_d;
  bool operator==(const PublicKey& o) const {
    return params == o.params && n == o.n && g == o.g && h == o.h &&
           enc_of_d == o.enc_of_d;
  }
};

using PrfKey = std::array<uint8_t, 16>;

struct EvalKey {
  uint8_t sigma = 0;
  BigInt d_share;
  PrfKey k_prf{};
  bool operator==(const EvalKey&) const = default;
};

// Test-profile only.
struct KeyEscrow {
  BigInt d;
  BigInt p;
  BigInt q;
  bool operator==(const KeyEscrow&) const = default;
};

struct KeySet {
  PublicKey pk;
  std::array<EvalKey, 2> ek;
  std::optional<KeyEscrow> escrow;
};

// Returns a prime p = 2p'+1 of exactly `bits` bits with its two top bits
// set and p' prime. Throws kSetupFailure after `max_windows` sieve windows.
BigInt GenerateSafePrime(size_t bits, RandomSource& rng, size_t max_windows = 1 << 14);

// Key generation. p and q may be supplied (for frozen test vectors);
// otherwise fresh safe primes are drawn from rng.
KeySet Setup(const HssParams& params, RandomSource& rng);
KeySet SetupWithPrimes(const HssParams& params, const BigInt& p, const BigInt& q,
                       RandomSource& rng);

// Client/provider side encryption with fixed-base tables for g, h and the
// components of enc_of_d. Immutable after construction.
class Encryptor {
 public:
  explicit Encryptor(const PublicKey& pk);

  const PublicKey& pk() const { return *pk_; }

  // Throws kDomain unless 0 <= x < N.
  Ciphertext Encrypt(const BigInt& x, RandomSource& rng) const;
  Ciphertext Encrypt(int64_t x, RandomSource& rng) const;
  // x reduced mod N first; for signed plaintexts.
  Ciphertext EncryptSigned(const BigInt& x, RandomSource& rng) const;
  GroupPair EncryptPair(const BigInt& x, RandomSource& rng) const;

  // Multiplies c by a fresh encryption of zero on both pairs.
  Ciphertext Rerandomize(const Ciphertext& c, RandomSource& rng) const;

 private:
  GroupPair ZeroPair(RandomSource& rng) const;

  std::shared_ptr<const PublicKey> pk_;
  FixedBaseTable g_table_;
  FixedBaseTable h_table_;
  FixedBaseTable ed0_table_;
  FixedBaseTable ed1_table_;
};

// Componentwise product on both pairs: encodes x+y and d(x+y).
Ciphertext AddCiphertexts(const PublicKey& pk, const Ciphertext& a,
                          const Ciphertext& b);

// Escrow decryption (test profile). Throws kDecode if the pair is not a
// valid encryption under d.
BigInt DecryptPair(const PublicKey& pk, const BigInt& d, const GroupPair& pair);
// Returns the main plaintext and checks the companion encodes d times it.
BigInt Decrypt(const PublicKey& pk, const KeyEscrow& escrow, const Ciphertext& c);

}  // namespace hssdt

#endif  // HSSDT_HSS_KEYS_H_
