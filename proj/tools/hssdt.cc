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

// hssdt: key generation, model encryption, the two-server service, the
// online client and a loopback benchmark harness.

#include <csignal>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "hssdt/common/errors.h"
#include "hssdt/common/random.h"
#include "hssdt/compare/fixed_point.h"
#include "hssdt/hss/keys.h"
#include "hssdt/hss/params.h"
#include "hssdt/hss/serialization.h"
#include "hssdt/protocol/client.h"
#include "hssdt/protocol/provider.h"
#include "hssdt/protocol/reconstruct.h"
#include "hssdt/protocol/server.h"
#include "hssdt/protocol/wire.h"
#include "hssdt/transport/frame.h"
#include "hssdt/transport/loopback.h"
#include "hssdt/transport/model_store.h"
#include "hssdt/transport/report.h"
#include "hssdt/transport/server_node.h"
#include "hssdt/transport/tcp.h"
#include "hssdt/tree/gbdt.h"
#include "hssdt/tree/model_json.h"
#include "hssdt/tree/plain_eval.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace hssdt {
namespace {

constexpr int kExitError = 1;
constexpr int kExitRejected = 3;

std::atomic<bool> g_stop{false};
void OnSignal(int) { g_stop = true; }

std::unique_ptr<RandomSource> MakeRng(std::optional<uint64_t> seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

// ---- key files ----

struct KeyDir {
  PublicKey pk;
  std::optional<EvalKey> ek[2];
};

KeyDir LoadKeys(const fs::path& dir, const std::string& expected_profile) {
  KeyDir keys;
  keys.pk = DecodePublicKey(ReadFileBytes(dir / "pk.bin"));
  if (!expected_profile.empty() && ProfileName(keys.pk.params.profile) != expected_profile) {
    Fail(ErrorCode::kDomain, "profile mismatch: keys are " +
                                 std::string(ProfileName(keys.pk.params.profile)) +
                                 ", --profile is " + expected_profile);
  }
  for (int s = 0; s < 2; ++s) {
    auto path = dir / ("ek" + std::to_string(s) + ".bin");
    if (fs::exists(path)) keys.ek[s] = DecodeEvalKey(ReadFileBytes(path));
  }
  return keys;
}

// ---- model files ----

struct PlainModel {
  std::optional<CompleteTree> tree;
  std::optional<GbdtModel> gbdt;
};

PlainModel LoadModelFile(const std::string& path) {
  json doc = ReadJsonFile(path);
  PlainModel m;
  if (IsGbdtDocument(doc)) {
    m.gbdt = LoadGbdt(doc);
  } else {
    m.tree = PadComplete(LoadTree(doc));
  }
  return m;
}

// Encoded t-bit integers, or with `real` set, numbers run through the
// model's fixed-point encoding (offset 2^(t-1)).
FeatureVector ParseFeatures(const std::string& text, bool real, uint32_t t,
                            uint32_t frac_bits) {
  FeatureVector x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      if (real) {
        double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        x.push_back(ScaleFixed(v, {t, frac_bits}));
      } else {
        x.push_back(std::stoull(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      Fail(ErrorCode::kDomain, "bad feature value '" + item + "'");
    }
  }
  return x;
}

// "160" sets both client links; "client0=160,client1=40,provider=10" sets
// links individually.
std::map<Link, double> ParseRtt(const std::string& text) {
  std::map<Link, double> out;
  if (text.empty()) return out;
  if (text.find('=') == std::string::npos) {
    double ms = std::stod(text);
    out[Link::kClientServer0] = ms;
    out[Link::kClientServer1] = ms;
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    std::string name = item.substr(0, eq);
    double ms = std::stod(item.substr(eq + 1));
    if (name == "client0") {
      out[Link::kClientServer0] = ms;
    } else if (name == "client1") {
      out[Link::kClientServer1] = ms;
    } else if (name == "provider") {
      out[Link::kProviderServers] = ms;
    } else {
      Fail(ErrorCode::kDomain, "unknown link '" + name + "' (client0, client1, provider)");
    }
  }
  return out;
}

// ---- loopback scenario shared by bench, report and verify-run ----

struct Scenario {
  std::string profile = "test";
  uint32_t h = 3;
  uint32_t n = 16;
  uint32_t t = 10;
  uint32_t trees = 2;
  uint32_t member_percent = 0;
  EvalMode mode = EvalMode::kVerifiable;
  uint32_t trials = 1;
  std::string rtt;
  uint64_t seed = 1;
  std::string model_path;
};

struct ScenarioRun {
  KeySet keys;
  std::unique_ptr<Encryptor> enc;
  PlainModel plain;
  EncryptedModel model;
  std::vector<uint8_t> model_bytes;
  std::vector<uint8_t> view_bytes;
  MetricsLedger ledger;
  std::unique_ptr<LoopbackNetwork> net;
  std::string model_id;
  std::unique_ptr<SeededRandom> rng;
};

std::unique_ptr<ScenarioRun> Prepare(const Scenario& sc) {
  auto run = std::make_unique<ScenarioRun>();
  run->rng = std::make_unique<SeededRandom>(sc.seed);
  HssParams params = HssParams::ForProfile(ParseProfile(sc.profile));
  run->keys = Setup(params, *run->rng);
  run->enc = std::make_unique<Encryptor>(run->keys.pk);
  bool ensemble = sc.mode == EvalMode::kGbdt;
  if (!sc.model_path.empty()) {
    run->plain = LoadModelFile(sc.model_path);
    if (ensemble != run->plain.gbdt.has_value()) {
      Fail(ErrorCode::kDomain, "mode does not match the model file kind");
    }
  } else {
    RandomTreeOptions opt;
    opt.h = sc.h;
    opt.n = sc.n;
    opt.t = sc.t;
    opt.member_percent = sc.member_percent;
    opt.label_min = -1000;
    opt.label_max = 1000;
    if (ensemble) {
      GbdtModel g;
      for (uint32_t j = 0; j < sc.trees; ++j) g.trees.push_back(RandomCompleteTree(*run->rng, opt));
      g.eta = 3;
      g.t0 = 17;
      run->plain.gbdt = g;
    } else {
      run->plain.tree = RandomCompleteTree(*run->rng, opt);
    }
  }
  run->model = ensemble ? EncryptGbdt(*run->enc, *run->plain.gbdt, *run->rng)
                        : EncryptTree(*run->enc, *run->plain.tree, *run->rng);
  run->model_bytes = EncodeModel(run->keys.pk, run->model);
  run->view_bytes = EncodeClientView(run->keys.pk, MakeClientView(run->model));
  run->net = std::make_unique<LoopbackNetwork>(run->keys.pk, run->keys.ek[0],
                                               run->keys.ek[1], &run->ledger);
  run->model_id = UploadModel(run->net->provider(0), run->net->provider(1), run->model_bytes);
  for (auto [link, ms] : ParseRtt(sc.rtt)) run->net->SetRtt(link, ms);
  return run;
}

FeatureVector RandomX(RandomSource& rng, uint32_t n, uint32_t t) {
  FeatureVector x(n);
  for (auto& v : x) v = rng.UniformU64(uint64_t{1} << t);
  return x;
}

BigInt Expected(const PlainModel& m, const FeatureVector& x) {
  if (m.gbdt) return EvalGbdtPlain(*m.gbdt, x);
  return EvalPlain(*m.tree, x).label;
}

// ---- commands ----

int CmdKeygen(const std::string& profile, const std::string& dir,
              std::optional<uint64_t> seed) {
  HssParams params = HssParams::ForProfile(ParseProfile(profile));
  auto rng = MakeRng(seed);
  auto start = std::chrono::steady_clock::now();
  KeySet keys = Setup(params, *rng);
  WriteFileBytes(fs::path(dir) / "pk.bin", EncodePublicKey(keys.pk));
  WriteFileBytes(fs::path(dir) / "ek0.bin", EncodeEvalKey(keys.ek[0]));
  WriteFileBytes(fs::path(dir) / "ek1.bin", EncodeEvalKey(keys.ek[1]));
  if (keys.escrow) WriteFileBytes(fs::path(dir) / "escrow.bin", EncodeKeyEscrow(*keys.escrow));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("wrote %s/{pk,ek0,ek1}.bin  profile=%s modulus_bits=%zu (%.2fs)\n", dir.c_str(),
              profile.c_str(), params.modulus_bits, secs);
  return 0;
}

int CmdEncryptModel(const std::string& keys_dir, const std::string& profile,
                    const std::string& model_path, const std::string& out_dir,
                    const std::string& s0, const std::string& s1,
                    std::optional<uint64_t> seed) {
  KeyDir keys = LoadKeys(keys_dir, profile);
  Encryptor enc(keys.pk);
  auto rng = MakeRng(seed);
  PlainModel plain = LoadModelFile(model_path);
  EncryptedModel model = plain.gbdt ? EncryptGbdt(enc, *plain.gbdt, *rng)
                                    : EncryptTree(enc, *plain.tree, *rng);
  auto model_bytes = EncodeModel(keys.pk, model);
  auto view_bytes = EncodeClientView(keys.pk, MakeClientView(model));
  std::string id = ModelStore::ContentId(model_bytes);
  fs::path out(out_dir);
  WriteFileBytes(out / "model.hsdt", model_bytes);
  WriteFileBytes(out / "client_view.hsdt", view_bytes);
  WriteFileBytes(out / "model_id.txt",
                 std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(id.data()), id.size()));
  std::printf("model id      %s\n", id.c_str());
  std::printf("model bytes   %zu -> %s\n", model_bytes.size(), (out / "model.hsdt").c_str());
  std::printf("client view   %zu bytes -> %s\n", view_bytes.size(),
              (out / "client_view.hsdt").c_str());
  if (!s0.empty() || !s1.empty()) {
    if (s0.empty() || s1.empty()) Fail(ErrorCode::kDomain, "upload needs both --server0 and --server1");
    TcpChannel c0(ParseEndpoint(s0), Link::kProviderServers, nullptr);
    TcpChannel c1(ParseEndpoint(s1), Link::kProviderServers, nullptr);
    std::string uploaded = UploadModel(c0, c1, model_bytes);
    std::printf("uploaded      %s to both servers\n", uploaded.c_str());
  }
  return 0;
}

int CmdServe(const std::string& keys_dir, const std::string& profile, int role,
             const std::string& listen, const std::string& store_dir,
             const std::vector<std::string>& preload) {
  KeyDir keys = LoadKeys(keys_dir, profile);
  if (role != 0 && role != 1) Fail(ErrorCode::kDomain, "--role must be 0 or 1");
  if (!keys.ek[role]) Fail(ErrorCode::kIo, "missing ek" + std::to_string(role) + ".bin");
  auto store = std::make_shared<ModelStore>(store_dir);
  for (const auto& path : preload) {
    auto bytes = ReadFileBytes(path);
    DecodeModel(keys.pk, bytes).Validate();
    std::printf("loaded model %s\n", store->PutModel(bytes).c_str());
  }
  MetricsLedger ledger;
  ServerNode node(keys.pk, *keys.ek[role], store, &ledger);
  TcpServer server(node, ParseEndpoint(listen));
  server.Start();
  std::printf("server%d listening on port %u\n", role, server.port());
  std::fflush(stdout);
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  server.Stop();
  std::printf("%s\n", MetricsToJson(ledger.Snapshot()).dump(2).c_str());
  return 0;
}

int CmdQuery(const std::string& keys_dir, const std::string& profile,
             const std::string& view_path, const std::string& model_id,
             const std::string& s0, const std::string& s1, const std::string& mode_name,
             const std::string& features, bool real, std::optional<uint64_t> seed,
             int timeout_ms) {
  KeyDir keys = LoadKeys(keys_dir, profile);
  Encryptor enc(keys.pk);
  auto rng = MakeRng(seed);
  ClientModelView view = DecodeClientView(keys.pk, ReadFileBytes(view_path));
  EvalMode mode = ParseEvalMode(mode_name);
  FeatureVector x = ParseFeatures(features, real, view.t, view.frac_bits);
  MetricsLedger ledger;
  TcpChannel c0(ParseEndpoint(s0), Link::kClientServer0, &ledger, timeout_ms);
  TcpChannel c1(ParseEndpoint(s1), Link::kClientServer1, &ledger, timeout_ms);
  auto prepared = BuildQuery(enc, view, x, *rng);
  auto start = std::chrono::steady_clock::now();
  auto [r0, r1] = SubmitQuery(keys.pk, c0, c1, model_id, mode, prepared.query);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  Outcome o = Finish(keys.pk.n, prepared.mac_key, r0, r1);
  if (!o.accepted) {
    std::printf("verdict  REJECT (%s)\n", RejectReasonName(o.reason));
    return kExitRejected;
  }
  std::printf("label    %s\n", o.value.get_str().c_str());
  if (view.frac_bits > 0) {
    double v = mode == EvalMode::kGbdt
                   ? DescaleGbdt(o.value, view.frac_bits)
                   : std::ldexp(o.value.get_d(), -static_cast<int>(view.frac_bits));
    std::printf("value    %.6f\n", v);
  }
  std::printf("verdict  %s\n", mode == EvalMode::kPlain ? "ACCEPT (unverified mode)" : "ACCEPT (MAC ok)");
  std::printf("latency  %.1f ms\n", ms);
  return 0;
}

int CmdVerifyRun(Scenario sc, const std::string& tamper) {
  if (sc.mode == EvalMode::kPlain) Fail(ErrorCode::kDomain, "verify-run needs a verifiable mode");
  auto run = Prepare(sc);
  const PublicKey& pk = run->keys.pk;
  uint32_t n = run->model.n, t = run->model.t;
  FeatureVector x = RandomX(*run->rng, n, t);
  auto prepared = BuildQuery(*run->enc, MakeClientView(run->model), x, *run->rng);
  auto [r0, r1] = SubmitQuery(pk, run->net->client(0), run->net->client(1), run->model_id,
                              sc.mode, prepared.query);
  if (!tamper.empty()) {
    auto colon = tamper.find(':');
    if (colon == std::string::npos) Fail(ErrorCode::kDomain, "--tamper must be {v,w,pc}:{index|sel}");
    std::string field = tamper.substr(0, colon);
    std::string where = tamper.substr(colon + 1);
    auto& leaves = r1.trees[0];
    size_t index = 0;
    if (where == "sel") {
      for (size_t i = 0; i < leaves.size(); ++i) {
        if (leaves[i].pc == r0.trees[0][i].pc) index = i;
      }
    } else {
      index = std::stoul(where);
    }
    if (index >= leaves.size()) Fail(ErrorCode::kDomain, "tamper index out of range");
    BigInt delta = run->rng->Range(1, pk.n);
    BigInt* target = field == "v"    ? &leaves[index].value
                     : field == "w"  ? &leaves[index].proof
                     : field == "pc" ? &leaves[index].pc
                                     : nullptr;
    if (!target) Fail(ErrorCode::kDomain, "tamper field must be v, w or pc");
    *target = Mod(*target + delta, pk.n);
    std::printf("tampered %s share at slot %zu of server1\n", field.c_str(), index);
  }
  Outcome o = Finish(pk.n, prepared.mac_key, r0, r1);
  BigInt want = Expected(run->plain, x);
  if (!o.accepted) {
    std::printf("verdict  REJECT (%s)\n", RejectReasonName(o.reason));
    return kExitRejected;
  }
  std::printf("label    %s (plaintext %s)\n", o.value.get_str().c_str(), want.get_str().c_str());
  std::printf("verdict  ACCEPT\n");
  return o.value == want ? 0 : kExitError;
}

json RunScenario(const Scenario& sc, bool verbose) {
  auto run = Prepare(sc);
  const PublicKey& pk = run->keys.pk;
  uint64_t gates_per_query = 2 * ExpectedGates(run->model, sc.mode);
  size_t ok = 0;
  std::vector<double> latency_ms;
  uint64_t query_bytes = 0, response_bytes = 0, response_shares = 0;
  for (uint32_t i = 0; i < sc.trials; ++i) {
    FeatureVector x = RandomX(*run->rng, run->model.n, run->model.t);
    auto prepared = BuildQuery(*run->enc, MakeClientView(run->model), x, *run->rng);
    auto start = std::chrono::steady_clock::now();
    auto [r0, r1] = SubmitQuery(pk, run->net->client(0), run->net->client(1), run->model_id,
                                sc.mode, prepared.query);
    latency_ms.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count());
    Outcome o = Finish(pk.n, prepared.mac_key, r0, r1);
    ok += o.accepted && o.value == Expected(run->plain, x);
    query_bytes = EncodeQuery(pk, prepared.query).size();
    response_bytes = EncodeResponse(pk, r0).size();
    response_shares = 0;
    for (const auto& tree : r0.trees) {
      response_shares += tree.size() * (sc.mode == EvalMode::kPlain ? 2 : 3);
    }
    if (sc.mode == EvalMode::kGbdt) response_shares += 2;
    if (verbose) {
      std::fprintf(stderr, "  trial %u: %.1f ms %s\n", i + 1, latency_ms.back(),
                   o.accepted ? "ok" : RejectReasonName(o.reason));
    }
  }
  size_t m_total = 0, k_total = 0;
  for (const auto& tree : run->model.trees) {
    m_total += tree.m();
    k_total += tree.k();
  }
  size_t ct = pk.params.CiphertextBytes();
  double cm_kb_expected = 3.0 * static_cast<double>(m_total) * run->model.n *
                          static_cast<double>(ct) / 3072.0;
  json out = {
      {"scenario",
       {{"profile", sc.profile}, {"mode", EvalModeName(sc.mode)},
        {"h", run->model.trees.front().h}, {"n", run->model.n}, {"t", run->model.t},
        {"trees", run->model.trees.size()}, {"trials", sc.trials}, {"seed", sc.seed},
        {"rtt", sc.rtt}}},
      {"gates",
       {{"per_threshold_node", 4 * run->model.t - 2},
        {"per_server_per_query", gates_per_query / 2},
        {"measured_total", run->ledger.mul_gates()},
        {"expected_total", gates_per_query * sc.trials}}},
      {"sizes",
       {{"ciphertext_bytes", ct},
        {"client_view_bytes", run->view_bytes.size()},
        {"client_view_kb", static_cast<double>(run->view_bytes.size()) / 1024.0},
        {"client_view_expected_3mn_kb_scaled", cm_kb_expected},
        {"m_total", m_total},
        {"k_total", k_total},
        {"query_bytes", query_bytes},
        {"response_bytes_per_server", response_bytes},
        {"response_shares_per_server", response_shares},
        {"share_bytes", pk.params.ShareBytes()}}},
      {"correct", ok},
      {"latency_ms", {{"median", Median(latency_ms)}, {"samples", latency_ms}}},
      {"metrics", MetricsToJson(run->ledger.Snapshot())},
  };
  return out;
}

void PrintBenchTable(const json& r) {
  const auto& s = r["scenario"];
  const auto& g = r["gates"];
  const auto& z = r["sizes"];
  const auto& links = r["metrics"]["links"];
  std::printf("== %s mode, profile %s, h=%d n=%d t=%d trees=%d trials=%d ==\n",
              s["mode"].get<std::string>().c_str(), s["profile"].get<std::string>().c_str(),
              s["h"].get<int>(), s["n"].get<int>(), s["t"].get<int>(), s["trees"].get<int>(),
              s["trials"].get<int>());
  std::printf("  Mul per threshold node       %d\n", g["per_threshold_node"].get<int>());
  std::printf("  Mul per server per query     %llu\n",
              static_cast<unsigned long long>(g["per_server_per_query"].get<uint64_t>()));
  std::printf("  Mul measured / expected      %llu / %llu\n",
              static_cast<unsigned long long>(g["measured_total"].get<uint64_t>()),
              static_cast<unsigned long long>(g["expected_total"].get<uint64_t>()));
  std::printf("  client view (cm) blob        %.1f KB (3mn KB at 3 KB ciphertexts: %.1f)\n",
              z["client_view_kb"].get<double>(),
              z["client_view_expected_3mn_kb_scaled"].get<double>());
  std::printf("  query upload                 %llu bytes\n",
              static_cast<unsigned long long>(z["query_bytes"].get<uint64_t>()));
  std::printf("  response per server          %llu bytes, %llu shares\n",
              static_cast<unsigned long long>(z["response_bytes_per_server"].get<uint64_t>()),
              static_cast<unsigned long long>(z["response_shares_per_server"].get<uint64_t>()));
  for (auto it = links.begin(); it != links.end(); ++it) {
    std::printf("  %-22s msgs %-6llu bytes %-10llu rtt %.0f ms\n", it.key().c_str(),
                static_cast<unsigned long long>((*it)["messages"].get<uint64_t>()),
                static_cast<unsigned long long>((*it)["bytes"].get<uint64_t>()),
                (*it)["simulated_rtt_ms"].get<double>());
  }
  const auto& cs = r["metrics"]["server_compute_seconds"];
  std::printf("  server compute (median)      %.3f s\n", cs["median"].get<double>());
  std::printf("  end-to-end latency (median)  %.1f ms\n",
              r["latency_ms"]["median"].get<double>());
  std::printf("  correct                      %d/%d\n", r["correct"].get<int>(),
              s["trials"].get<int>());
}

std::vector<uint32_t> ParseList(const std::string& text) {
  std::vector<uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<uint32_t>(std::stoul(item)));
  return out;
}

}  // namespace
}  // namespace hssdt

int main(int argc, char** argv) {
  using namespace hssdt;
  CLI::App app{"Two-server private and verifiable decision tree evaluation"};
  app.require_subcommand(1);

  std::string profile, keys_dir = "keys", model_path, out_dir = ".", s0, s1, store_dir,
                       listen = "127.0.0.1:7000", view_path, model_id, mode = "verifiable",
                       features, tamper, rtt, hs = "3,8,13", json_out;
  std::optional<uint64_t> seed;
  int role = 0, timeout_ms = 120000;
  bool real_features = false;
  std::vector<std::string> preload;
  Scenario sc;

  auto* keygen = app.add_subcommand("keygen", "generate pk, ek0, ek1 into --keys");
  keygen->add_option("--profile", profile, "test|default")->default_val("test");
  keygen->add_option("--keys", keys_dir, "output directory");
  keygen->add_option("--seed", seed, "deterministic key generation");

  auto* encm = app.add_subcommand("encrypt-model", "encrypt a JSON model, write the model and client view");
  encm->add_option("--keys", keys_dir);
  encm->add_option("--profile", profile);
  encm->add_option("--model", model_path, "model JSON")->required();
  encm->add_option("--out", out_dir, "output directory");
  encm->add_option("--server0", s0, "upload to host:port");
  encm->add_option("--server1", s1, "upload to host:port");
  encm->add_option("--seed", seed);

  auto* serve = app.add_subcommand("serve", "run one evaluation server");
  serve->add_option("--keys", keys_dir);
  serve->add_option("--profile", profile);
  serve->add_option("--role", role, "0 or 1")->required();
  serve->add_option("--listen", listen, "host:port");
  serve->add_option("--store", store_dir, "model store directory");
  serve->add_option("--model", preload, "encrypted model file(s) to load at start");

  auto* query = app.add_subcommand("query", "run one online query against both servers");
  query->add_option("--keys", keys_dir);
  query->add_option("--profile", profile);
  query->add_option("--view", view_path, "client view file")->required();
  query->add_option("--model-id", model_id)->required();
  query->add_option("--server0", s0)->required();
  query->add_option("--server1", s1)->required();
  query->add_option("--mode", mode, "plain|verifiable|gbdt");
  query->add_option("--x", features, "comma-separated t-bit encoded feature values")->required();
  query->add_flag("--real", real_features, "--x holds real numbers to fixed-point encode");
  query->add_option("--seed", seed);
  query->add_option("--timeout-ms", timeout_ms);

  auto add_scenario = [&](CLI::App* cmd) {
    cmd->add_option("--profile", sc.profile, "test|default")->default_val("test");
    cmd->add_option("--n", sc.n, "features");
    cmd->add_option("--t", sc.t, "bit width");
    cmd->add_option("--trees", sc.trees, "ensemble size (gbdt)");
    cmd->add_option("--member-percent", sc.member_percent);
    cmd->add_option("--mode", mode, "plain|verifiable|gbdt");
    cmd->add_option("--trials", sc.trials);
    cmd->add_option("--rtt-ms", rtt, "N (client links) or client0=N,client1=N,provider=N");
    cmd->add_option("--seed", sc.seed);
    cmd->add_option("--model", sc.model_path, "model JSON instead of a random tree");
  };
  auto* verify = app.add_subcommand("verify-run", "loopback query with optional share tampering");
  add_scenario(verify);
  verify->add_option("--height", sc.h);
  verify->add_option("--tamper", tamper, "{v,w,pc}:{index|sel}");

  auto* bench = app.add_subcommand("bench", "loopback benchmark: gates, bytes per link, timings");
  add_scenario(bench);
  bench->add_option("--height", hs, "comma-separated heights");
  bench->add_option("--json", json_out, "also write the results as JSON");

  auto* report = app.add_subcommand("report", "one loopback query; print the metrics JSON");
  add_scenario(report);
  report->add_option("--height", sc.h);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*keygen) return CmdKeygen(profile.empty() ? "test" : profile, keys_dir, seed);
    if (*encm) return CmdEncryptModel(keys_dir, profile, model_path, out_dir, s0, s1, seed);
    if (*serve) return CmdServe(keys_dir, profile, role, listen, store_dir, preload);
    if (*query) {
      return CmdQuery(keys_dir, profile, view_path, model_id, s0, s1, mode, features,
                      real_features, seed, timeout_ms);
    }
    sc.mode = ParseEvalMode(mode);
    sc.rtt = rtt;
    if (*verify) return CmdVerifyRun(sc, tamper);
    if (*report) {
      std::printf("%s\n", RunScenario(sc, false).dump(2).c_str());
      return 0;
    }
    if (*bench) {
      json all = json::array();
      for (uint32_t h : ParseList(hs)) {
        sc.h = h;
        json r = RunScenario(sc, true);
        PrintBenchTable(r);
        all.push_back(r);
      }
      if (!json_out.empty()) {
        std::string text = all.dump(2);
        WriteFileBytes(json_out, std::span<const uint8_t>(
                                     reinterpret_cast<const uint8_t*>(text.data()), text.size()));
      }
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return 0;
}
