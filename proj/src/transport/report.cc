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

#include "hssdt/transport/report.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace hssdt {

double Median(std::vector<double> values) {
  if (values.empty()) return 0;
  size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                   values.end());
  double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lo + hi) / 2;
}

nlohmann::json MetricsToJson(const MetricsSnapshot& s) {
  nlohmann::json links = nlohmann::json::object();
  for (size_t i = 0; i < kNumLinks; ++i) {
    const auto& l = s.links[i];
    links[std::string(LinkName(static_cast<Link>(i)))] = {
        {"messages", l.messages}, {"bytes", l.bytes}, {"simulated_rtt_ms", l.simulated_rtt_ms}};
  }
  const auto& t = s.server_compute_seconds;
  double total = std::accumulate(t.begin(), t.end(), 0.0);
  return {{"mul_gates", s.mul_gates},
          {"links", links},
          {"server_compute_seconds",
           {{"count", t.size()},
            {"total", total},
            {"mean", t.empty() ? 0.0 : total / static_cast<double>(t.size())},
            {"median", Median(t)},
            {"samples", t}}}};
}

}  // namespace hssdt
