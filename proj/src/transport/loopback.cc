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

#include "hssdt/transport/loopback.h"

#include <chrono>
#include <thread>

#include "hssdt/common/errors.h"

namespace hssdt {

Frame LoopbackChannel::RoundTrip(const Frame& request) {
  if (down_) Fail(ErrorCode::kTransport, "no response (server unreachable)");
  auto bytes = EncodeFrame(request);
  if (ledger_) ledger_->RecordMessage(link_, bytes.size());
  double rtt = rtt_ms_;
  if (rtt > 0) std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(rtt));
  auto reply = node_.HandleBytes(bytes);
  if (ledger_) ledger_->RecordMessage(link_, reply.size());
  return DecodeFrame(reply);
}

LoopbackNetwork::LoopbackNetwork(const PublicKey& pk, const EvalKey& ek0,
                                 const EvalKey& ek1, MetricsLedger* ledger)
    : ledger_(ledger) {
  const EvalKey* eks[2] = {&ek0, &ek1};
  for (int s = 0; s < 2; ++s) {
    nodes_[s] = std::make_unique<ServerNode>(pk, *eks[s], std::make_shared<ModelStore>(),
                                             ledger);
    Link client = s == 0 ? Link::kClientServer0 : Link::kClientServer1;
    client_[s] = std::make_unique<LoopbackChannel>(*nodes_[s], client, ledger);
    provider_[s] =
        std::make_unique<LoopbackChannel>(*nodes_[s], Link::kProviderServers, ledger);
  }
}

void LoopbackNetwork::SetRtt(Link link, double ms) {
  switch (link) {
    case Link::kClientServer0:
      client_[0]->set_rtt_ms(ms);
      break;
    case Link::kClientServer1:
      client_[1]->set_rtt_ms(ms);
      break;
    case Link::kProviderServers:
      provider_[0]->set_rtt_ms(ms);
      provider_[1]->set_rtt_ms(ms);
      break;
    case Link::kServer0Server1:
      Fail(ErrorCode::kProtocolMisuse, "there is no server-to-server link");
  }
  if (ledger_) ledger_->SetSimulatedRtt(link, ms);
}

}  // namespace hssdt
