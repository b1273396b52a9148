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

#include "hssdt/common/metrics.h"

namespace hssdt {

std::string_view LinkName(Link link) {
  switch (link) {
    case Link::kClientServer0:
      return "client<->server0";
    case Link::kClientServer1:
      return "client<->server1";
    case Link::kProviderServers:
      return "provider<->servers";
    case Link::kServer0Server1:
      return "server0<->server1";
  }
  return "unknown";
}

void MetricsLedger::RecordMessage(Link link, uint64_t bytes) {
  auto& l = links_[static_cast<size_t>(link)];
  l.messages.fetch_add(1, std::memory_order_relaxed);
  l.bytes.fetch_add(bytes, std::memory_order_relaxed);
}

void MetricsLedger::SetSimulatedRtt(Link link, double ms) {
  links_[static_cast<size_t>(link)].rtt_ms.store(ms, std::memory_order_relaxed);
}

LinkCounters MetricsLedger::link(Link link) const {
  const auto& l = links_[static_cast<size_t>(link)];
  return {l.messages.load(std::memory_order_relaxed),
          l.bytes.load(std::memory_order_relaxed),
          l.rtt_ms.load(std::memory_order_relaxed)};
}

void MetricsLedger::RecordServerCompute(double seconds) {
  std::lock_guard<std::mutex> lock(timing_mu_);
  compute_seconds_.push_back(seconds);
}

MetricsSnapshot MetricsLedger::Snapshot() const {
  MetricsSnapshot s;
  s.mul_gates = mul_gates();
  for (size_t i = 0; i < kNumLinks; ++i) s.links[i] = link(static_cast<Link>(i));
  std::lock_guard<std::mutex> lock(timing_mu_);
  s.server_compute_seconds = compute_seconds_;
  return s;
}

void MetricsLedger::Reset() {
  mul_gates_.store(0);
  for (auto& l : links_) {
    l.messages.store(0);
    l.bytes.store(0);
    l.rtt_ms.store(0);
  }
  std::lock_guard<std::mutex> lock(timing_mu_);
  compute_seconds_.clear();
}

}  // namespace hssdt
