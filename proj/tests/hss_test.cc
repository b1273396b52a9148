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

#include <gtest/gtest.h>

#include <thread>

#include "hssdt/common/errors.h"
#include "hssdt/hss/ddlog.h"
#include "hssdt/hss/keys.h"
#include "hssdt/hss/oracle_evaluator.h"
#include "hssdt/hss/paillier_evaluator.h"
#include "hssdt/hss/rms_program.h"
#include "hssdt/hss/serialization.h"
#include "test_keys.h"

namespace hssdt {
namespace {

using testing::Open;
using testing::TestEncryptor;
using testing::TestKeys;
using testing::TestOracleKey;

// (1+N)^x mod N^2 by repeated multiplication, independent of the library.
BigInt OnePlusNSlow(int64_t x, const BigInt& n) {
  BigInt n2 = n * n, acc = 1;
  for (int64_t i = 0; i < x; ++i) acc = (acc * (n + 1)) % n2;
  return acc;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

struct Pair {
  PaillierEvaluator s0;
  PaillierEvaluator s1;
  explicit Pair(MetricsLedger* ledger = nullptr)
      : s0(TestKeys().pk, TestKeys().ek[0], ledger),
        s1(TestKeys().pk, TestKeys().ek[1], ledger) {}
};

TEST(Ddlog, ToyModulusValues) {
  EXPECT_EQ(Ddlog(1, 35), 0);
  EXPECT_EQ(OnePlusNSlow(3, 35), 106);
  EXPECT_EQ(Ddlog(106, 35), 3);
}

TEST(Ddlog, DifferenceOverRandomUnitsAtToyModulus) {
  const BigInt n = 35, n2 = 35 * 35;
  SeededRandom rng(1);
  for (int i = 0; i < 500; ++i) {
    BigInt u;
    do {
      u = rng.Range(1, n2);
    } while (gcd(u, n) != 1);
    for (int64_t x : {0, 1, 5, 34}) {
      BigInt v = (OnePlusNSlow(x, n) * u) % n2;
      EXPECT_EQ(Mod(Ddlog(v, n) - Ddlog(u, n), n), x % 35);
    }
  }
}

TEST(Ddlog, NonUnitLowPartIsConversionError) {
  EXPECT_EQ(CodeOf([] { Ddlog(35 * 3, 35); }), ErrorCode::kConversion);
  EXPECT_EQ(CodeOf([] { Ddlog(7, 35); }), ErrorCode::kConversion);
}

TEST(Ddlog, LawAtTestModulus) {
  const BigInt& n = TestKeys().pk.n;
  const BigInt& n2 = TestKeys().pk.n2;
  SeededRandom rng(2);
  for (int i = 0; i < 1000; ++i) {
    BigInt u = rng.Range(1, n2);
    BigInt x = rng.Bits(20);
    BigInt v = Mod((1 + x * n) * u, n2);
    EXPECT_EQ(Mod(Ddlog(v, n) - Ddlog(u, n), n), x);
  }
}

TEST(Setup, SharesDifferByKeyAndPrfKeyMatches) {
  const KeySet& ks = TestKeys();
  ASSERT_TRUE(ks.escrow.has_value());
  EXPECT_EQ(ks.ek[1].d_share - ks.ek[0].d_share, ks.escrow->d);
  EXPECT_EQ(ks.ek[0].k_prf, ks.ek[1].k_prf);
  EXPECT_EQ(ks.ek[0].sigma, 0);
  EXPECT_EQ(ks.ek[1].sigma, 1);
  for (const auto& ek : ks.ek) {
    EXPECT_GE(ek.d_share, 0);
    EXPECT_LT(ek.d_share, ks.pk.n);
  }
  EXPECT_EQ(ks.escrow->p * ks.escrow->q, ks.pk.n);
  EXPECT_EQ(mpz_sizeinbase(ks.pk.n.get_mpz_t(), 2), 512u);
  EXPECT_EQ(DecryptPair(ks.pk, ks.escrow->d, ks.pk.enc_of_d), ks.escrow->d);
  EXPECT_EQ(gcd(ks.pk.g, ks.pk.n2), 1);
  EXPECT_EQ(PowMod(ks.pk.g, ks.escrow->d, ks.pk.n2), ks.pk.h);
}

TEST(Setup, SafePrimes) {
  const KeyEscrow& e = *TestKeys().escrow;
  for (const BigInt* p : {&e.p, &e.q}) {
    BigInt half = (*p - 1) / 2;
    EXPECT_NE(mpz_probab_prime_p(p->get_mpz_t(), 30), 0);
    EXPECT_NE(mpz_probab_prime_p(half.get_mpz_t(), 30), 0);
  }
}

TEST(Setup, ConsecutiveSetupsDiffer) {
  SystemRandom rng;
  KeySet a = hssdt::Setup(HssParams::Test(), rng);
  KeySet b = hssdt::Setup(HssParams::Test(), rng);
  EXPECT_NE(a.pk.n, b.pk.n);
}

TEST(Setup, RejectsInconsistentParams) {
  HssParams p = HssParams::Test();
  p.modulus_bits = 300;
  EXPECT_EQ(CodeOf([&] { p.Validate(); }), ErrorCode::kDomain);
  HssParams q = HssParams::Default();
  q.key_escrow = true;
  EXPECT_EQ(CodeOf([&] { q.Validate(); }), ErrorCode::kDomain);
}

TEST(Input, CompanionEncodesKeyTimesPlaintext) {
  const KeySet& ks = TestKeys();
  SeededRandom rng(3);
  const BigInt& d = ks.escrow->d;
  Ciphertext c0 = TestEncryptor().Encrypt(int64_t{0}, rng);
  EXPECT_EQ(DecryptPair(ks.pk, d, c0.companion), 0);
  Ciphertext c1 = TestEncryptor().Encrypt(int64_t{1}, rng);
  EXPECT_EQ(DecryptPair(ks.pk, d, c1.companion), d);
  BigInt big = ks.pk.n - 5;
  Ciphertext cb = TestEncryptor().Encrypt(big, rng);
  EXPECT_EQ(Decrypt(ks.pk, *ks.escrow, cb), big);
}

TEST(Input, FreshRandomnessPerEncryption) {
  const KeySet& ks = TestKeys();
  SeededRandom rng(4);
  for (int64_t x : {0, 1, 42}) {
    Ciphertext a = TestEncryptor().Encrypt(x, rng);
    Ciphertext b = TestEncryptor().Encrypt(x, rng);
    EXPECT_NE(EncodeCiphertext(ks.pk.params, a), EncodeCiphertext(ks.pk.params, b));
    EXPECT_EQ(Decrypt(ks.pk, *ks.escrow, a), x);
    EXPECT_EQ(Decrypt(ks.pk, *ks.escrow, b), x);
  }
}

TEST(Input, OutOfRangeIsDomainError) {
  SeededRandom rng(5);
  EXPECT_EQ(CodeOf([&] { TestEncryptor().Encrypt(TestKeys().pk.n, rng); }),
            ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([&] { TestEncryptor().Encrypt(int64_t{-1}, rng); }),
            ErrorCode::kDomain);
}

TEST(Input, RerandomizeKeepsPlaintext) {
  const KeySet& ks = TestKeys();
  SeededRandom rng(6);
  Ciphertext c = TestEncryptor().Encrypt(int64_t{17}, rng);
  Ciphertext r = TestEncryptor().Rerandomize(c, rng);
  EXPECT_NE(c, r);
  EXPECT_EQ(Decrypt(ks.pk, *ks.escrow, r), 17);
}

TEST(Evaluator, TrivialOne) {
  Pair p;
  MemoryValue a = p.s0.TrivialOne(), b = p.s1.TrivialOne();
  EXPECT_EQ(a.x_share, 0);
  EXPECT_EQ(b.x_share, 1);
  EXPECT_EQ(a.dx_share, TestKeys().ek[0].d_share);
  auto [x, dx] = Open(a, b, TestKeys().pk.n);
  EXPECT_EQ(x, 1);
  EXPECT_EQ(dx, TestKeys().escrow->d);
}

TEST(Evaluator, ConvertInputOpensToValueAndKeyMultiple) {
  const BigInt& n = TestKeys().pk.n;
  const BigInt& d = TestKeys().escrow->d;
  SeededRandom rng(7);
  for (int64_t x : {0, 1, 9}) {
    Pair p;
    Ciphertext c = TestEncryptor().Encrypt(x, rng);
    auto [vx, vdx] = Open(p.s0.ConvertInput(c), p.s1.ConvertInput(c), n);
    EXPECT_EQ(vx, x);
    EXPECT_EQ(vdx, Mod(d * x, n));
    EXPECT_EQ(p.s0.gates(), 1u);
  }
}

TEST(Evaluator, LinearOpsAndOutput) {
  const BigInt& n = TestKeys().pk.n;
  SeededRandom rng(8);
  Pair p;
  Ciphertext c5 = TestEncryptor().Encrypt(int64_t{5}, rng);
  MemoryValue a0 = p.s0.ConvertInput(c5), a1 = p.s1.ConvertInput(c5);
  uint64_t gates = p.s0.gates();
  EXPECT_EQ(Open(p.s0.Add(a0, p.s0.Zero()), p.s1.Add(a1, p.s1.Zero()), n).first, 5);
  EXPECT_EQ(Open(p.s0.Sub(a0, a0), p.s1.Sub(a1, a1), n).first, 0);
  EXPECT_EQ(Open(p.s0.CMul(3, a0), p.s1.CMul(3, a1), n).first, 15);
  EXPECT_EQ(Reconstruct(p.s0.Output(a0), p.s1.Output(a1), n), 5);
  EXPECT_EQ(Reconstruct(p.s0.Output(p.s0.TrivialOne()), p.s1.Output(p.s1.TrivialOne()), n), 1);
  EXPECT_EQ(p.s0.gates(), gates);
  EXPECT_EQ(CodeOf([&] { p.s0.Add(a0, a1); }), ErrorCode::kProtocolMisuse);
  EXPECT_EQ(CodeOf([&] { p.s0.Output(a0, n + 2); }), ErrorCode::kUnsupportedModulus);
  Share s = p.s0.Output(a0, n);
  EXPECT_LT(s.value, n);
}

TEST(Evaluator, AddCiphertexts) {
  const KeySet& ks = TestKeys();
  SeededRandom rng(9);
  Pair p;
  Ciphertext c2 = TestEncryptor().Encrypt(int64_t{2}, rng);
  Ciphertext c3 = TestEncryptor().Encrypt(int64_t{3}, rng);
  Ciphertext z = TestEncryptor().Encrypt(int64_t{0}, rng);
  EXPECT_EQ(Decrypt(ks.pk, *ks.escrow, p.s0.AddCt(c2, c3)), 5);
  EXPECT_EQ(Decrypt(ks.pk, *ks.escrow, p.s0.AddCt(c2, z)), 2);
}

TEST(Evaluator, MulMatchesOracleOnRandomPairs) {
  const BigInt& n = TestKeys().pk.n;
  SeededRandom rng(10);
  MetricsLedger ledger;
  Pair p(&ledger);
  OracleEvaluator o0(TestOracleKey(), 0), o1(TestOracleKey(), 1);
  for (int i = 0; i < 100; ++i) {
    int64_t x = static_cast<int64_t>(rng.UniformU64(2000)) - 1000;
    int64_t y = static_cast<int64_t>(rng.UniformU64(2000)) - 1000;
    Ciphertext cx = TestEncryptor().EncryptSigned(x, rng);
    Ciphertext cy = TestEncryptor().EncryptSigned(y, rng);
    MemoryValue m0 = p.s0.Mul(cx, p.s0.ConvertInput(cy));
    MemoryValue m1 = p.s1.Mul(cx, p.s1.ConvertInput(cy));
    BigInt got = Reconstruct(p.s0.Output(m0), p.s1.Output(m1), n);
    auto ox = OracleInput(TestOracleKey(), Mod(x, n));
    auto oy = OracleInput(TestOracleKey(), Mod(y, n));
    BigInt want = Reconstruct(o0.Output(o0.Mul(ox, o0.ConvertInput(oy))),
                              o1.Output(o1.Mul(ox, o1.ConvertInput(oy))), n);
    EXPECT_EQ(got, want);
    EXPECT_EQ(got, Mod(BigInt(x) * y, n));
  }
  EXPECT_EQ(ledger.mul_gates(), 400u);
  EXPECT_EQ(o0.gates(), 200u);
}

TEST(Evaluator, MulByZeroAndOne) {
  const BigInt& n = TestKeys().pk.n;
  SeededRandom rng(11);
  Pair p;
  Ciphertext c0 = TestEncryptor().Encrypt(int64_t{0}, rng);
  Ciphertext c1 = TestEncryptor().Encrypt(int64_t{1}, rng);
  Ciphertext c7 = TestEncryptor().Encrypt(int64_t{7}, rng);
  MemoryValue y0 = p.s0.ConvertInput(c7), y1 = p.s1.ConvertInput(c7);
  EXPECT_EQ(Open(p.s0.Mul(c0, y0), p.s1.Mul(c0, y1), n).first, 0);
  auto [v, dv] = Open(p.s0.Mul(c1, y0), p.s1.Mul(c1, y1), n);
  EXPECT_EQ(v, 7);
  EXPECT_EQ(dv, Mod(7 * TestKeys().escrow->d, n));
}

TEST(Evaluator, MalformedElementIsDecodeError) {
  SeededRandom rng(12);
  Pair p;
  Ciphertext c = TestEncryptor().Encrypt(int64_t{1}, rng);
  c.main.c0 = TestKeys().pk.n2;
  EXPECT_EQ(CodeOf([&] { p.s0.ConvertInput(c); }), ErrorCode::kDecode);
}

TEST(Oracle, DeterministicUnderSeed) {
  auto run = [] {
    OracleEvaluator e(TestOracleKey(), 1);
    auto c = OracleInput(TestOracleKey(), 4);
    return e.Output(e.Mul(c, e.ConvertInput(OracleInput(TestOracleKey(), 3))));
  };
  EXPECT_EQ(run(), run());
  OracleEvaluator e0(TestOracleKey(), 0), e1(TestOracleKey(), 1);
  auto c3 = OracleInput(TestOracleKey(), 3), c4 = OracleInput(TestOracleKey(), 4);
  EXPECT_EQ(Reconstruct(e0.Output(e0.Mul(c3, e0.ConvertInput(c4))),
                        e1.Output(e1.Mul(c3, e1.ConvertInput(c4))),
                        TestOracleKey().n),
            12);
}

TEST(Rms, RandomProgramsAgreeAcrossBackendsAndPlain) {
  const KeySet& ks = TestKeys();
  const BigInt& n = ks.pk.n;
  SeededRandom rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<BigInt> inputs;
    RmsProgram prog = RandomProgram(rng, 12, 100, &inputs);
    std::vector<Ciphertext> cts;
    std::vector<OracleCiphertext> ocs;
    for (const auto& x : inputs) {
      cts.push_back(TestEncryptor().EncryptSigned(x, rng));
      ocs.push_back(OracleInput(TestOracleKey(), Mod(x, n)));
    }
    Pair p;
    auto s0 = EvalProgram(p.s0, prog, cts);
    auto s1 = EvalProgram(p.s1, prog, cts);
    OracleEvaluator o0(TestOracleKey(), 0), o1(TestOracleKey(), 1);
    auto t0 = EvalProgram(o0, prog, ocs);
    auto t1 = EvalProgram(o1, prog, ocs);
    auto want = EvalPlain(prog, inputs);
    ASSERT_EQ(s0.size(), want.size());
    for (size_t i = 0; i < want.size(); ++i) {
      EXPECT_EQ(Reconstruct(s0[i], s1[i], n), Mod(want[i], n)) << trial;
      EXPECT_EQ(Reconstruct(t0[i], t1[i], n), Mod(want[i], n)) << trial;
    }
    EXPECT_EQ(p.s0.gates(), prog.GateCount());
    EXPECT_EQ(o1.gates(), prog.GateCount());
  }
}

TEST(Rms, ServerOrderAndThreadPlacementDoNotMatter) {
  const BigInt& n = TestKeys().pk.n;
  SeededRandom rng(14);
  std::vector<BigInt> inputs;
  RmsProgram prog = RandomProgram(rng, 10, 64, &inputs);
  std::vector<Ciphertext> cts;
  for (const auto& x : inputs) cts.push_back(TestEncryptor().EncryptSigned(x, rng));
  Pair a, b;
  auto a0 = EvalProgram(a.s0, prog, cts);
  auto a1 = EvalProgram(a.s1, prog, cts);
  std::vector<Share> b0, b1;
  std::thread t1([&] { b1 = EvalProgram(b.s1, prog, cts); });
  std::thread t0([&] { b0 = EvalProgram(b.s0, prog, cts); });
  t0.join();
  t1.join();
  for (size_t i = 0; i < a0.size(); ++i) {
    EXPECT_EQ(Reconstruct(a0[i], a1[i], n), Reconstruct(b0[i], b1[i], n));
  }
}

TEST(Serialization, KeysRoundTrip) {
  const KeySet& ks = TestKeys();
  auto pkb = EncodePublicKey(ks.pk);
  EXPECT_EQ(DecodePublicKey(pkb), ks.pk);
  EXPECT_EQ(EncodePublicKey(DecodePublicKey(pkb)), pkb);
  for (const auto& ek : ks.ek) EXPECT_EQ(DecodeEvalKey(EncodeEvalKey(ek)), ek);
  EXPECT_EQ(DecodeKeyEscrow(EncodeKeyEscrow(*ks.escrow)), *ks.escrow);
}

TEST(Serialization, CiphertextWidthAndRoundTrip) {
  const KeySet& ks = TestKeys();
  SeededRandom rng(15);
  Ciphertext c = TestEncryptor().Encrypt(int64_t{3}, rng);
  auto bytes = EncodeCiphertext(ks.pk.params, c);
  EXPECT_EQ(bytes.size(), 4u * 128u);
  EXPECT_EQ(DecodeCiphertext(bytes, ks.pk), c);
  bytes.pop_back();
  EXPECT_EQ(CodeOf([&] { DecodeCiphertext(bytes, ks.pk); }), ErrorCode::kDecode);
}

TEST(Serialization, CorruptKeysAreDecodeErrors) {
  auto pkb = EncodePublicKey(TestKeys().pk);
  auto bad = pkb;
  bad[0] ^= 1;
  EXPECT_EQ(CodeOf([&] { DecodePublicKey(bad); }), ErrorCode::kDecode);
  bad = pkb;
  bad[4] = 9;
  EXPECT_EQ(CodeOf([&] { DecodePublicKey(bad); }), ErrorCode::kDecode);
  bad = pkb;
  bad.push_back(0);
  EXPECT_EQ(CodeOf([&] { DecodePublicKey(bad); }), ErrorCode::kDecode);
  std::vector<uint8_t> empty;
  EXPECT_EQ(CodeOf([&] { DecodeEvalKey(empty); }), ErrorCode::kDecode);
}

TEST(Params, ProfileWidths) {
  HssParams d = HssParams::Default();
  EXPECT_EQ(d.CiphertextBytes(), 3072u);
  EXPECT_EQ(d.ShareBytes(), 384u);
  HssParams t = HssParams::Test();
  EXPECT_EQ(t.CiphertextBytes(), 512u);
  EXPECT_NO_THROW(d.Validate());
  EXPECT_NO_THROW(t.Validate());
}

}  // namespace
}  // namespace hssdt
