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

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <thread>

#include "hssdt/common/errors.h"
#include "hssdt/hss/serialization.h"
#include "hssdt/protocol/client.h"
#include "hssdt/protocol/provider.h"
#include "hssdt/protocol/reconstruct.h"
#include "hssdt/protocol/wire.h"
#include "hssdt/transport/frame.h"
#include "hssdt/transport/loopback.h"
#include "hssdt/transport/model_store.h"
#include "hssdt/transport/report.h"
#include "hssdt/transport/server_node.h"
#include "hssdt/transport/tcp.h"
#include "hssdt/tree/gbdt.h"
#include "hssdt/tree/plain_eval.h"
#include "support/test_keys.h"

namespace hssdt {
namespace {

using testing::TestEncryptor;
using testing::TestKeys;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{0};
}

BigInt RandomUnit(RandomSource& rng, const BigInt& n, const BigInt& n2) {
  BigInt v;
  do {
    v = rng.Below(n2);
  } while (sgn(v) == 0 || gcd(v, n) != 1);
  return v;
}

Ciphertext RandomCiphertext(RandomSource& rng) {
  const PublicKey& pk = TestKeys().pk;
  return {{RandomUnit(rng, pk.n, pk.n2), RandomUnit(rng, pk.n, pk.n2)},
          {RandomUnit(rng, pk.n, pk.n2), RandomUnit(rng, pk.n, pk.n2)}};
}

CompleteTree SmallTree(RandomSource& rng, uint32_t h = 1, uint32_t n = 2, uint32_t t = 3) {
  RandomTreeOptions opt;
  opt.h = h;
  opt.n = n;
  opt.t = t;
  opt.label_min = -9;
  opt.label_max = 9;
  return RandomCompleteTree(rng, opt);
}

TEST(FrameTest, RoundTripsRandomFrames) {
  SeededRandom rng(1);
  for (int i = 0; i < 10000; ++i) {
    Frame f;
    f.type = static_cast<MsgType>(1 + rng.UniformU64(5));
    f.payload.resize(rng.UniformU64(64));
    rng.Fill(f.payload);
    auto bytes = EncodeFrame(f);
    ASSERT_EQ(bytes.size(), kFrameHeaderBytes + f.payload.size());
    ASSERT_EQ(DecodeFrame(bytes), f);

    QueryEnvelope env;
    env.model_id = std::string(rng.UniformU64(70), 'a');
    env.mode = static_cast<EvalMode>(rng.UniformU64(3));
    env.query = f.payload;
    ASSERT_EQ(DecodeQueryEnvelope(EncodeQueryEnvelope(env)), env);

    ErrorPayload e{static_cast<ErrorCode>(1 + rng.UniformU64(11)), env.model_id};
    ASSERT_EQ(DecodeErrorPayload(EncodeErrorPayload(e)), e);
  }
}

TEST(FrameTest, RejectsBadHeaders) {
  auto good = EncodeFrame({MsgType::kPing, {1, 2, 3}});
  auto bad = good;
  bad[0] = 'X';
  EXPECT_EQ(CodeOf([&] { DecodeFrame(bad); }), ErrorCode::kDecode);
  bad = good;
  bad[4] = 2;
  EXPECT_EQ(CodeOf([&] { DecodeFrame(bad); }), ErrorCode::kDecode);
  for (uint8_t type : {0, 6, 0xff}) {
    bad = good;
    bad[5] = type;
    EXPECT_EQ(CodeOf([&] { DecodeFrame(bad); }), ErrorCode::kDecode);
  }
  bad = good;
  bad[13] = 4;  // length 4, payload 3
  EXPECT_EQ(CodeOf([&] { DecodeFrame(bad); }), ErrorCode::kDecode);
  bad = good;
  bad[6] = 0x80;  // overlong
  EXPECT_EQ(CodeOf([&] { DecodeFrame(bad); }), ErrorCode::kDecode);
  EXPECT_EQ(CodeOf([&] { DecodeFrame(std::span<const uint8_t>(good).first(10)); }),
            ErrorCode::kDecode);
}

TEST(WireTest, CiphertextWidthFollowsModulus) {
  SeededRandom rng(2);
  const PublicKey& pk = TestKeys().pk;
  auto bytes = EncodeCiphertext(pk.params, RandomCiphertext(rng));
  EXPECT_EQ(bytes.size(), 4 * ((2 * pk.params.modulus_bits + 7) / 8));
  EXPECT_EQ(HssParams::Default().CiphertextBytes(), 3072u);
}

TEST(WireTest, RandomQueriesAndResponsesRoundTrip) {
  SeededRandom rng(3);
  const PublicKey& pk = TestKeys().pk;
  for (int i = 0; i < 10000; ++i) {
    ClientQuery q;
    rng.Fill(q.nonce);
    size_t trees = 1 + rng.UniformU64(2);
    for (size_t j = 0; j < trees; ++j) {
      std::vector<BitCiphertexts> rows(1 + rng.UniformU64(2));
      size_t t = 1 + rng.UniformU64(2);
      for (auto& row : rows) {
        for (size_t b = 0; b < t; ++b) row.push_back(RandomCiphertext(rng));
      }
      q.selected.push_back(rows);
    }
    q.mac_key = RandomCiphertext(rng);
    ASSERT_EQ(DecodeQuery(pk, EncodeQuery(pk, q)), q);

    ServerResponse r;
    r.sigma = static_cast<uint8_t>(rng.UniformU64(2));
    r.mode = static_cast<EvalMode>(rng.UniformU64(3));
    for (size_t j = 0; j < trees; ++j) {
      std::vector<LeafShares> leaves(2 + rng.UniformU64(3));
      for (auto& s : leaves) {
        s.pc = rng.Below(pk.n);
        s.value = rng.Below(pk.n);
        s.proof = r.mode == EvalMode::kPlain ? BigInt(0) : rng.Below(pk.n);
      }
      r.trees.push_back(leaves);
    }
    if (r.mode == EvalMode::kGbdt) {
      r.t0 = rng.Below(pk.n);
      r.t0_proof = rng.Below(pk.n);
    }
    ASSERT_EQ(DecodeResponse(pk, EncodeResponse(pk, r)), r);
  }
}

TEST(ModelStoreTest, PersistsByteIdenticallyAndReloads) {
  auto dir = std::filesystem::temp_directory_path() / "hssdt_store_test";
  std::filesystem::remove_all(dir);
  SeededRandom rng(4);
  const PublicKey& pk = TestKeys().pk;
  auto model_bytes = EncodeModel(pk, EncryptTree(TestEncryptor(), SmallTree(rng), rng));
  auto key_bytes = EncodePublicKey(pk);
  std::string mid, kid;
  {
    ModelStore store(dir);
    mid = store.PutModel(model_bytes);
    kid = store.PutKey(key_bytes);
    EXPECT_EQ(mid, ModelStore::ContentId(model_bytes));
    EXPECT_EQ(mid, store.PutModel(model_bytes));
  }
  ModelStore reloaded(dir);
  EXPECT_EQ(reloaded.ModelBytes(mid), model_bytes);
  EXPECT_EQ(reloaded.KeyBytes(kid), key_bytes);
  EXPECT_EQ(EncodeModel(pk, *reloaded.Model(pk, mid)), model_bytes);
  EXPECT_TRUE(reloaded.HasModel(mid));
  EXPECT_EQ(CodeOf([&] { reloaded.ModelBytes(std::string(64, '0')); }),
            ErrorCode::kUnknownModel);
  EXPECT_EQ(CodeOf([&] { reloaded.ModelBytes("../../etc/passwd"); }),
            ErrorCode::kUnknownModel);
  std::filesystem::remove_all(dir);
}

TEST(ModelStoreTest, ConcurrentReadersAndWriters) {
  ModelStore store;
  std::vector<std::thread> threads;
  std::atomic<int> failures{0};
  for (int w = 0; w < 4; ++w) {
    threads.emplace_back([&, w] {
      for (int i = 0; i < 200; ++i) {
        std::vector<uint8_t> blob = {static_cast<uint8_t>(w), static_cast<uint8_t>(i)};
        std::string id = store.PutModel(blob);
        if (store.ModelBytes(id) != blob) ++failures;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(failures.load(), 0);
}

struct Harness {
  MetricsLedger ledger;
  LoopbackNetwork net{TestKeys().pk, TestKeys().ek[0], TestKeys().ek[1], &ledger};
};

TEST(LoopbackTest, AllModesEndToEndWithNoServerToServerTraffic) {
  SeededRandom rng(5);
  const PublicKey& pk = TestKeys().pk;
  Harness h;
  CompleteTree tree = SmallTree(rng, 2, 3, 4);
  auto model = EncryptTree(TestEncryptor(), tree, rng);
  std::string id = UploadModel(h.net.provider(0), h.net.provider(1), EncodeModel(pk, model));

  GbdtModel gbdt;
  gbdt.trees = {SmallTree(rng, 1, 3, 4), SmallTree(rng, 1, 3, 4)};
  gbdt.eta = 2;
  gbdt.t0 = 5;
  auto gmodel = EncryptGbdt(TestEncryptor(), gbdt, rng);
  std::string gid = UploadModel(h.net.provider(0), h.net.provider(1), EncodeModel(pk, gmodel));

  for (EvalMode mode : {EvalMode::kPlain, EvalMode::kVerifiable, EvalMode::kGbdt}) {
    bool ens = mode == EvalMode::kGbdt;
    FeatureVector x = {rng.UniformU64(16), rng.UniformU64(16), rng.UniformU64(16)};
    auto prepared = BuildQuery(TestEncryptor(), MakeClientView(ens ? gmodel : model), x, rng);
    auto before = h.ledger.link(Link::kClientServer0);
    auto [r0, r1] = SubmitQuery(pk, h.net.client(0), h.net.client(1), ens ? gid : id, mode,
                                prepared.query);
    auto after = h.ledger.link(Link::kClientServer0);
    EXPECT_EQ(after.messages - before.messages, 2u);
    size_t up = EncodeFrame({MsgType::kQuery,
                             EncodeQueryEnvelope({ens ? gid : id, mode,
                                                  EncodeQuery(pk, prepared.query)})})
                    .size();
    size_t down = kFrameHeaderBytes + EncodeResponse(pk, r0).size();
    EXPECT_EQ(after.bytes - before.bytes, up + down);
    Outcome o = Finish(pk.n, prepared.mac_key, r0, r1);
    ASSERT_TRUE(o.accepted);
    EXPECT_EQ(o.value, ens ? EvalGbdtPlain(gbdt, x) : BigInt(EvalPlain(tree, x).label));
  }
  auto s2s = h.ledger.link(Link::kServer0Server1);
  EXPECT_EQ(s2s.messages, 0u);
  EXPECT_EQ(s2s.bytes, 0u);
  EXPECT_EQ(h.ledger.Snapshot().server_compute_seconds.size(), 6u);
  auto json = MetricsToJson(h.ledger.Snapshot());
  EXPECT_EQ(json["links"]["server0<->server1"]["bytes"], 0);
  EXPECT_EQ(CodeOf([&] { h.net.SetRtt(Link::kServer0Server1, 1); }),
            ErrorCode::kProtocolMisuse);
}

TEST(LoopbackTest, ErrorsComeBackAsErrorFrames) {
  SeededRandom rng(6);
  const PublicKey& pk = TestKeys().pk;
  Harness h;
  auto model = EncryptTree(TestEncryptor(), SmallTree(rng), rng);
  auto prepared = BuildQuery(TestEncryptor(), MakeClientView(model), {1, 2}, rng);
  try {
    SubmitQuery(pk, h.net.client(0), h.net.client(1), std::string(64, 'a'), EvalMode::kPlain,
                prepared.query);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownModel);
  }
  Frame empty_query{MsgType::kQuery, {}};
  Frame reply = h.net.server(0).Handle(empty_query);
  ASSERT_EQ(reply.type, MsgType::kError);
  EXPECT_EQ(DecodeErrorPayload(reply.payload).code, ErrorCode::kDecode);
  reply = h.net.server(0).Handle({MsgType::kResponse, {}});
  EXPECT_EQ(reply.type, MsgType::kError);
  Ping(h.net.client(1));
}

TEST(LoopbackTest, DeadServerIsReportedByLink) {
  SeededRandom rng(7);
  const PublicKey& pk = TestKeys().pk;
  Harness h;
  auto model = EncryptTree(TestEncryptor(), SmallTree(rng), rng);
  std::string id = UploadModel(h.net.provider(0), h.net.provider(1), EncodeModel(pk, model));
  auto prepared = BuildQuery(TestEncryptor(), MakeClientView(model), {1, 2}, rng);
  h.net.client(1).set_down(true);
  try {
    SubmitQuery(pk, h.net.client(0), h.net.client(1), id, EvalMode::kPlain, prepared.query);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTransport);
    EXPECT_NE(std::string(e.what()).find("client<->server1"), std::string::npos);
  }
}

TEST(LoopbackTest, InjectedRttAddsOneRoundTripOnly) {
  SeededRandom rng(8);
  const PublicKey& pk = TestKeys().pk;
  Harness h;
  auto model = EncryptTree(TestEncryptor(), SmallTree(rng), rng);
  std::string id = UploadModel(h.net.provider(0), h.net.provider(1), EncodeModel(pk, model));
  auto prepared = BuildQuery(TestEncryptor(), MakeClientView(model), {1, 2}, rng);
  auto time = [&] {
    auto start = std::chrono::steady_clock::now();
    SubmitQuery(pk, h.net.client(0), h.net.client(1), id, EvalMode::kPlain, prepared.query);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };
  double base = time();
  h.net.SetRtt(Link::kClientServer0, 200);
  h.net.SetRtt(Link::kClientServer1, 200);
  double slow = time();
  EXPECT_GE(slow - base, 150);
  EXPECT_LT(slow - base, 390);  // parallel links: one round trip, not two
  EXPECT_EQ(h.ledger.link(Link::kClientServer0).simulated_rtt_ms, 200);
}

// Mutated frames of every kind must yield an Error (or valid) frame, never
// a crash. Queries target an absent model so each mutation costs only the
// decoders; a smaller batch hits a stored model and runs evaluation.
TEST(FuzzTest, MutatedFramesFailGracefully) {
  SeededRandom rng(9);
  const PublicKey& pk = TestKeys().pk;
  Harness h;
  CompleteTree tree;
  tree.h = 1;
  tree.n = 1;
  tree.t = 1;
  tree.decisions = {DecisionNode{1, TestKind::kThreshold, 0, {}}};
  tree.labels = {1, 2};
  auto model = EncryptTree(TestEncryptor(), tree, rng);
  auto model_bytes = EncodeModel(pk, model);
  std::string id = UploadModel(h.net.provider(0), h.net.provider(1), model_bytes);
  auto prepared = BuildQuery(TestEncryptor(), MakeClientView(model), {1}, rng);
  auto query_bytes = EncodeQuery(pk, prepared.query);

  std::vector<std::vector<uint8_t>> corpus = {
      EncodeFrame({MsgType::kPing, {}}),
      EncodeFrame({MsgType::kModelUpload, model_bytes}),
      EncodeFrame({MsgType::kQuery,
                   EncodeQueryEnvelope({std::string(64, 'f'), EvalMode::kPlain, query_bytes})}),
      EncodeFrame({MsgType::kQuery,
                   EncodeQueryEnvelope({std::string(64, 'f'), EvalMode::kVerifiable,
                                        query_bytes})}),
      EncodeFrame(ErrorFrame(ErrorCode::kDecode, "x")),
  };
  auto mutate = [&](std::vector<uint8_t> b) {
    int edits = 1 + static_cast<int>(rng.UniformU64(4));
    for (int e = 0; e < edits; ++e) {
      switch (rng.UniformU64(4)) {
        case 0:
          if (!b.empty()) b[rng.UniformU64(b.size())] ^= static_cast<uint8_t>(1 + rng.UniformU64(255));
          break;
        case 1:
          if (!b.empty()) b.resize(rng.UniformU64(b.size()));
          break;
        case 2:
          b.insert(b.begin() + static_cast<long>(rng.UniformU64(b.size() + 1)),
                   static_cast<uint8_t>(rng.NextU64()));
          break;
        default:
          if (b.size() > kFrameHeaderBytes) b[rng.UniformU64(kFrameHeaderBytes)] = static_cast<uint8_t>(rng.NextU64());
      }
    }
    return b;
  };
  size_t errors = 0;
  for (int i = 0; i < 100000; ++i) {
    auto input = mutate(corpus[rng.UniformU64(corpus.size())]);
    Frame reply = DecodeFrame(h.net.server(0).HandleBytes(input));
    errors += reply.type == MsgType::kError;
  }
  EXPECT_GT(errors, 90000u);

  auto live = EncodeFrame({MsgType::kQuery,
                           EncodeQueryEnvelope({id, EvalMode::kPlain, query_bytes})});
  for (int i = 0; i < 300; ++i) {
    Frame reply = DecodeFrame(h.net.server(1).HandleBytes(mutate(live)));
    EXPECT_TRUE(reply.type == MsgType::kError || reply.type == MsgType::kResponse);
  }
  EXPECT_EQ(h.ledger.link(Link::kServer0Server1).messages, 0u);
}

class TcpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (int s = 0; s < 2; ++s) {
      nodes_[s] = std::make_unique<ServerNode>(TestKeys().pk, TestKeys().ek[s],
                                               std::make_shared<ModelStore>(), &ledger_);
      servers_[s] = std::make_unique<TcpServer>(*nodes_[s], Endpoint{"127.0.0.1", 0});
      servers_[s]->Start();
    }
  }
  Endpoint At(int s) { return {"127.0.0.1", servers_[s]->port()}; }

  MetricsLedger ledger_;
  std::unique_ptr<ServerNode> nodes_[2];
  std::unique_ptr<TcpServer> servers_[2];
};

TEST_F(TcpTest, QueryOverSockets) {
  SeededRandom rng(10);
  const PublicKey& pk = TestKeys().pk;
  CompleteTree tree = SmallTree(rng, 2, 2, 3);
  auto model = EncryptTree(TestEncryptor(), tree, rng);
  TcpChannel p0(At(0), Link::kProviderServers, &ledger_);
  TcpChannel p1(At(1), Link::kProviderServers, &ledger_);
  std::string id = UploadModel(p0, p1, EncodeModel(pk, model));
  TcpChannel c0(At(0), Link::kClientServer0, &ledger_);
  TcpChannel c1(At(1), Link::kClientServer1, &ledger_);
  for (int i = 0; i < 3; ++i) {
    FeatureVector x = {rng.UniformU64(8), rng.UniformU64(8)};
    auto prepared = BuildQuery(TestEncryptor(), MakeClientView(model), x, rng);
    auto [r0, r1] = SubmitQuery(pk, c0, c1, id, EvalMode::kVerifiable, prepared.query);
    Outcome o = Verify(pk.n, prepared.mac_key, r0, r1);
    ASSERT_TRUE(o.accepted);
    EXPECT_EQ(o.value, EvalPlain(tree, x).label);
  }
  EXPECT_EQ(ledger_.link(Link::kClientServer0).messages, 6u);
  EXPECT_EQ(ledger_.link(Link::kServer0Server1).messages, 0u);
}

TEST_F(TcpTest, GarbageHeaderGetsErrorAndServerSurvives) {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(servers_[0]->port());
  ::inet_pton(AF_INET, "127.0.0.1", &addr.sin_addr);
  ASSERT_EQ(::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr), 0);
  const char junk[] = "GET / HTTP/1.1\r\n\r\n";
  ASSERT_GT(::send(fd, junk, sizeof junk - 1, 0), 0);
  uint8_t buf[256];
  ssize_t got = ::recv(fd, buf, sizeof buf, MSG_WAITALL);
  ::close(fd);
  ASSERT_GE(got, static_cast<ssize_t>(kFrameHeaderBytes));
  Frame reply = DecodeFrame(std::span<const uint8_t>(buf, static_cast<size_t>(got)));
  EXPECT_EQ(reply.type, MsgType::kError);

  TcpChannel c(At(0), Link::kClientServer0, &ledger_);
  Ping(c);
}

TEST_F(TcpTest, StoppedServerReportsLink) {
  servers_[1]->Stop();
  TcpChannel c(At(1), Link::kClientServer1, &ledger_, 500);
  try {
    Ping(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTransport);
    EXPECT_NE(std::string(e.what()).find("client<->server1"), std::string::npos);
  }
}

TEST(EndpointTest, Parses) {
  Endpoint e = ParseEndpoint("localhost:7000");
  EXPECT_EQ(e.host, "localhost");
  EXPECT_EQ(e.port, 7000);
  EXPECT_EQ(CodeOf([] { ParseEndpoint("nohost"); }), ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([] { ParseEndpoint("h:99999"); }), ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([] { ParseEndpoint("h:12x"); }), ErrorCode::kDomain);
}

}  // namespace
}  // namespace hssdt
