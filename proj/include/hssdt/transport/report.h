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

#ifndef HSSDT_TRANSPORT_REPORT_H_
#define HSSDT_TRANSPORT_REPORT_H_

#include "json.hpp"

#include "hssdt/common/metrics.h"

namespace hssdt {

// {
//   "mul_gates": u64,
//   "links": {"<link name>": {"messages", "bytes", "simulated_rtt_ms"}, ...},
//   "server_compute_seconds": {"count", "total", "mean", "median", "samples": [...]}
// }
nlohmann::json MetricsToJson(const MetricsSnapshot& snapshot);

double Median(std::vector<double> values);

}  // namespace hssdt

#endif  // HSSDT_TRANSPORT_REPORT_H_
