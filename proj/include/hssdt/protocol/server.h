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

#ifndef HSSDT_PROTOCOL_SERVER_H_
#define HSSDT_PROTOCOL_SERVER_H_

#include "hssdt/common/metrics.h"
#include "hssdt/hss/keys.h"
#include "hssdt/protocol/messages.h"

namespace hssdt {

struct ServerOptions {
  // Test hook: drop the zero-sum ensemble masks so per-tree outputs can be
  // inspected.
  bool zero_ensemble_masks = false;
};

// One server's whole response to a query. Never talks to the other server.
// Throws kProtocol when the query does not match the model or the mode does
// not match the model kind.
ServerResponse Evaluate(const PublicKey& pk, const EvalKey& ek,
                        const EncryptedModel& model, const ClientQuery& query,
                        EvalMode mode, MetricsLedger* ledger = nullptr,
                        const ServerOptions& options = {});

// Multiplication gates Evaluate performs for this model and mode.
uint64_t ExpectedGates(const EncryptedModel& model, EvalMode mode);

}  // namespace hssdt

#endif  // HSSDT_PROTOCOL_SERVER_H_
