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

#include "hssdt/transport/server_node.h"

#include <time.h>

#include <future>

#include "hssdt/common/bytes.h"
#include "hssdt/common/errors.h"
#include "hssdt/protocol/wire.h"

namespace hssdt {
namespace {

double ThreadCpuSeconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

std::string Prefixed(ServerChannel& c, const std::string& what) {
  return std::string(LinkName(c.link())) + ": " + what;
}

// Runs fn, re-raising any failure with the link name in front.
template <typename Fn>
auto OnLink(ServerChannel& c, Fn fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), Prefixed(c, e.what()));
  }
}

}  // namespace

ServerNode::ServerNode(PublicKey pk, EvalKey ek, std::shared_ptr<ModelStore> store,
                       MetricsLedger* ledger)
    : pk_(std::move(pk)), ek_(std::move(ek)), store_(std::move(store)), ledger_(ledger) {
  if (!store_) store_ = std::make_shared<ModelStore>();
}

Frame ServerNode::Handle(const Frame& request) {
  try {
    return Dispatch(request);
  } catch (const Error& e) {
    return ErrorFrame(e.code(), e.what());
  } catch (const std::exception& e) {
    return ErrorFrame(ErrorCode::kProtocol, e.what());
  }
}

std::vector<uint8_t> ServerNode::HandleBytes(std::span<const uint8_t> request) {
  Frame reply;
  try {
    reply = Handle(DecodeFrame(request));
  } catch (const Error& e) {
    reply = ErrorFrame(e.code(), e.what());
  }
  return EncodeFrame(reply);
}

Frame ServerNode::Dispatch(const Frame& request) {
  switch (request.type) {
    case MsgType::kPing:
      return {MsgType::kPing, {}};
    case MsgType::kModelUpload: {
      EncryptedModel model = DecodeModel(pk_, request.payload);
      model.Validate();
      ByteWriter w;
      w.String(store_->PutModel(request.payload));
      return {MsgType::kResponse, w.Take()};
    }
    case MsgType::kQuery: {
      QueryEnvelope env = DecodeQueryEnvelope(request.payload);
      ClientQuery query = DecodeQuery(pk_, env.query);
      auto model = store_->Model(pk_, env.model_id);
      double start = ThreadCpuSeconds();
      ServerResponse resp = Evaluate(pk_, ek_, *model, query, env.mode, ledger_, options_);
      if (ledger_) ledger_->RecordServerCompute(ThreadCpuSeconds() - start);
      return {MsgType::kResponse, EncodeResponse(pk_, resp)};
    }
    case MsgType::kResponse:
    case MsgType::kError:
      break;
  }
  Fail(ErrorCode::kProtocol,
       std::string("servers do not accept ") + MsgTypeName(request.type) + " frames");
}

std::string UploadModel(ServerChannel& s0, ServerChannel& s1,
                        std::span<const uint8_t> encoded_model) {
  Frame req{MsgType::kModelUpload, {encoded_model.begin(), encoded_model.end()}};
  std::string ids[2];
  ServerChannel* channels[2] = {&s0, &s1};
  for (int i = 0; i < 2; ++i) {
    ids[i] = OnLink(*channels[i], [&] {
      Frame reply = channels[i]->RoundTrip(req);
      ExpectFrame(reply, MsgType::kResponse);
      ByteReader r(reply.payload);
      std::string id = r.String();
      r.ExpectEnd();
      return id;
    });
  }
  if (ids[0] != ids[1]) Fail(ErrorCode::kProtocol, "servers disagree on the model id");
  return ids[0];
}

std::pair<ServerResponse, ServerResponse> SubmitQuery(
    const PublicKey& pk, ServerChannel& s0, ServerChannel& s1,
    const std::string& model_id, EvalMode mode, const ClientQuery& query) {
  Frame req{MsgType::kQuery, EncodeQueryEnvelope({model_id, mode, EncodeQuery(pk, query)})};
  auto ask = [&](ServerChannel& c) {
    return OnLink(c, [&] {
      Frame reply = c.RoundTrip(req);
      ExpectFrame(reply, MsgType::kResponse);
      return DecodeResponse(pk, reply.payload);
    });
  };
  auto first = std::async(std::launch::async, [&] { return ask(s0); });
  ServerResponse r1 = ask(s1);
  ServerResponse r0 = first.get();
  return {std::move(r0), std::move(r1)};
}

void Ping(ServerChannel& channel) {
  OnLink(channel, [&] {
    ExpectFrame(channel.RoundTrip({MsgType::kPing, {}}), MsgType::kPing);
    return 0;
  });
}

}  // namespace hssdt
