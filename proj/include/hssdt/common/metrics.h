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

#ifndef HSSDT_COMMON_METRICS_H_
#define HSSDT_COMMON_METRICS_H_

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <string_view>
#include <vector>

namespace hssdt {

enum class Link : uint8_t {
  kClientServer0 = 0,
  kClientServer1 = 1,
  kProviderServers = 2,
  kServer0Server1 = 3,
};
inline constexpr size_t kNumLinks = 4;

std::string_view LinkName(Link link);

struct LinkCounters {
  uint64_t messages = 0;
  uint64_t bytes = 0;
  double simulated_rtt_ms = 0;
};

struct MetricsSnapshot {
  uint64_t mul_gates = 0;
  std::array<LinkCounters, kNumLinks> links{};
  std::vector<double> server_compute_seconds;
};

// Counters for multiplication gates, per-link traffic and server compute
// time. All recording methods are safe to call concurrently.
class MetricsLedger {
 public:
  void RecordMul(uint64_t count = 1) {
    mul_gates_.fetch_add(count, std::memory_order_relaxed);
  }
  uint64_t mul_gates() const {
    return mul_gates_.load(std::memory_order_relaxed);
  }

  void RecordMessage(Link link, uint64_t bytes);
  void SetSimulatedRtt(Link link, double ms);
  LinkCounters link(Link link) const;

  void RecordServerCompute(double seconds);

  MetricsSnapshot Snapshot() const;
  void Reset();

 private:
  struct AtomicLink {
    std::atomic<uint64_t> messages{0};
    std::atomic<uint64_t> bytes{0};
    std::atomic<double> rtt_ms{0};
  };

  std::atomic<uint64_t> mul_gates_{0};
  std::array<AtomicLink, kNumLinks> links_;
  mutable std::mutex timing_mu_;
  std::vector<double> compute_seconds_;
};

}  // namespace hssdt

#endif  // HSSDT_COMMON_METRICS_H_
