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

#ifndef HSSDT_TRANSPORT_LOOPBACK_H_
#define HSSDT_TRANSPORT_LOOPBACK_H_

#include <atomic>
#include <memory>

#include "hssdt/common/metrics.h"
#include "hssdt/hss/keys.h"
#include "hssdt/transport/server_node.h"

namespace hssdt {

// In-process channel: frames are fully encoded and decoded, counted in the
// ledger on its link, and delayed by the simulated round-trip time.
class LoopbackChannel final : public ServerChannel {
 public:
  LoopbackChannel(ServerNode& node, Link link, MetricsLedger* ledger)
      : node_(node), link_(link), ledger_(ledger) {}

  Frame RoundTrip(const Frame& request) override;
  Link link() const override { return link_; }

  void set_rtt_ms(double ms) { rtt_ms_ = ms; }
  // Simulates a dead server: RoundTrip fails with kTransport.
  void set_down(bool down) { down_ = down; }

 private:
  ServerNode& node_;
  Link link_;
  MetricsLedger* ledger_;
  std::atomic<double> rtt_ms_{0};
  std::atomic<bool> down_{false};
};

// Two servers plus the client and provider links to each. There is no
// channel between the servers.
class LoopbackNetwork {
 public:
  LoopbackNetwork(const PublicKey& pk, const EvalKey& ek0, const EvalKey& ek1,
                  MetricsLedger* ledger);

  ServerNode& server(int sigma) { return *nodes_[sigma]; }
  LoopbackChannel& client(int sigma) { return *client_[sigma]; }
  LoopbackChannel& provider(int sigma) { return *provider_[sigma]; }

  // Applies to both channels of the link kind (client links share one
  // setting per server).
  void SetRtt(Link link, double ms);

 private:
  MetricsLedger* ledger_;
  std::unique_ptr<ServerNode> nodes_[2];
  std::unique_ptr<LoopbackChannel> client_[2];
  std::unique_ptr<LoopbackChannel> provider_[2];
};

}  // namespace hssdt

#endif  // HSSDT_TRANSPORT_LOOPBACK_H_
