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

#ifndef HSSDT_TRANSPORT_TCP_H_
#define HSSDT_TRANSPORT_TCP_H_

#include <atomic>
#include <cstdint>
#include <list>
#include <mutex>
#include <string>
#include <thread>

#include "hssdt/common/metrics.h"
#include "hssdt/transport/server_node.h"

namespace hssdt {

struct Endpoint {
  std::string host = "127.0.0.1";
  uint16_t port = 0;
};

// "host:port"; throws kDomain.
Endpoint ParseEndpoint(const std::string& text);

// Listens on one endpoint and serves each connection on its own thread.
// Connections carry any number of request/response frame pairs.
class TcpServer {
 public:
  TcpServer(ServerNode& node, Endpoint listen, uint64_t max_payload = kDefaultMaxPayload);
  ~TcpServer();
  TcpServer(const TcpServer&) = delete;
  TcpServer& operator=(const TcpServer&) = delete;

  // Binds and starts accepting; port 0 picks an ephemeral port.
  void Start();
  uint16_t port() const { return port_; }
  void Stop();
  // Blocks until Stop is called from another thread.
  void Wait();

 private:
  void AcceptLoop();
  void Serve(int fd);

  ServerNode& node_;
  Endpoint listen_;
  uint64_t max_payload_;
  int listen_fd_ = -1;
  uint16_t port_ = 0;
  std::atomic<bool> stopping_{false};
  std::thread acceptor_;
  std::mutex mu_;
  std::list<std::thread> workers_;
  std::list<int> open_fds_;
};

// Client side of one TCP link. Keeps the connection open between calls and
// reconnects after a failure.
class TcpChannel final : public ServerChannel {
 public:
  TcpChannel(Endpoint remote, Link link, MetricsLedger* ledger, int timeout_ms = 120000);
  ~TcpChannel() override;

  Frame RoundTrip(const Frame& request) override;
  Link link() const override { return link_; }

 private:
  void Connect();
  void Close();

  Endpoint remote_;
  Link link_;
  MetricsLedger* ledger_;
  int timeout_ms_;
  int fd_ = -1;
};

}  // namespace hssdt

#endif  // HSSDT_TRANSPORT_TCP_H_
