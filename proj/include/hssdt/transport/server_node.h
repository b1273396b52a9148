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

#ifndef HSSDT_TRANSPORT_SERVER_NODE_H_
#define HSSDT_TRANSPORT_SERVER_NODE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hssdt/common/metrics.h"
#include "hssdt/hss/keys.h"
#include "hssdt/protocol/messages.h"
#include "hssdt/protocol/server.h"
#include "hssdt/transport/frame.h"
#include "hssdt/transport/model_store.h"

namespace hssdt {

// One evaluation server, independent of how frames arrive. It knows its own
// keys and store and nothing about the other server.
class ServerNode {
 public:
  ServerNode(PublicKey pk, EvalKey ek, std::shared_ptr<ModelStore> store,
             MetricsLedger* ledger = nullptr);

  uint8_t sigma() const { return ek_.sigma; }
  const PublicKey& pk() const { return pk_; }
  ModelStore& store() { return *store_; }
  ServerOptions& options() { return options_; }

  // Never throws; failures become Error frames.
  Frame Handle(const Frame& request);
  std::vector<uint8_t> HandleBytes(std::span<const uint8_t> request);

 private:
  Frame Dispatch(const Frame& request);

  PublicKey pk_;
  EvalKey ek_;
  std::shared_ptr<ModelStore> store_;
  MetricsLedger* ledger_;
  ServerOptions options_;
};

// A request/response path from a client or provider to one server.
class ServerChannel {
 public:
  virtual ~ServerChannel() = default;
  // Throws kTransport naming the link on delivery failure.
  virtual Frame RoundTrip(const Frame& request) = 0;
  virtual Link link() const = 0;
};

// Uploads to both servers; returns the content id they agree on.
std::string UploadModel(ServerChannel& s0, ServerChannel& s1,
                        std::span<const uint8_t> encoded_model);

// Sends the same query to both servers concurrently and returns
// (server0 response, server1 response).
std::pair<ServerResponse, ServerResponse> SubmitQuery(
    const PublicKey& pk, ServerChannel& s0, ServerChannel& s1,
    const std::string& model_id, EvalMode mode, const ClientQuery& query);

void Ping(ServerChannel& channel);

}  // namespace hssdt

#endif  // HSSDT_TRANSPORT_SERVER_NODE_H_
