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

#ifndef HSSDT_HSS_RMS_PROGRAM_H_
#define HSSDT_HSS_RMS_PROGRAM_H_

#include <cstddef>
#include <vector>

#include "hssdt/common/bigint.h"
#include "hssdt/common/errors.h"
#include "hssdt/common/random.h"
#include "hssdt/hss/evaluator.h"

namespace hssdt {

// Straight-line program over input slots (ciphertexts) and memory slots.
// Every instruction except kAddInputs appends one memory slot; kAddInputs
// appends one input slot.
struct RmsInstruction {
  enum class Op : uint8_t {
    kTrivialOne,
    kConvertInput,  // a: input
    kMul,           // a: input, b: memory
    kAdd,           // a, b: memory
    kSub,           // a, b: memory
    kCMul,          // k * memory a
    kAddInputs,     // a, b: input
  };
  Op op;
  size_t a = 0;
  size_t b = 0;
  BigInt k;
};

struct RmsProgram {
  size_t num_inputs = 0;
  std::vector<RmsInstruction> code;
  std::vector<size_t> outputs;  // memory slots

  size_t GateCount() const;
};

// Exact evaluation over the integers.
std::vector<BigInt> EvalPlain(const RmsProgram& program,
                              const std::vector<BigInt>& inputs);

// Random program with at most max_gates Mul/ConvertInput instructions whose
// memory values never exceed 2^bound_bits in magnitude. Inputs are small
// signed integers, written to *inputs.
RmsProgram RandomProgram(RandomSource& rng, size_t max_gates, size_t bound_bits,
                         std::vector<BigInt>* inputs);

template <RmsEvaluator E>
std::vector<Share> EvalProgram(E& ev, const RmsProgram& program,
                               std::vector<typename E::Ciphertext> inputs) {
  using Op = RmsInstruction::Op;
  if (inputs.size() != program.num_inputs) {
    Fail(ErrorCode::kDomain, "program input count mismatch");
  }
  std::vector<typename E::Memory> mem;
  auto input = [&](size_t i) -> const typename E::Ciphertext& {
    if (i >= inputs.size()) Fail(ErrorCode::kDomain, "bad input slot");
    return inputs[i];
  };
  auto memory = [&](size_t i) -> const typename E::Memory& {
    if (i >= mem.size()) Fail(ErrorCode::kDomain, "bad memory slot");
    return mem[i];
  };
  for (const auto& ins : program.code) {
    switch (ins.op) {
      case Op::kTrivialOne:
        mem.push_back(ev.TrivialOne());
        break;
      case Op::kConvertInput:
        mem.push_back(ev.ConvertInput(input(ins.a)));
        break;
      case Op::kMul:
        mem.push_back(ev.Mul(input(ins.a), memory(ins.b)));
        break;
      case Op::kAdd:
        mem.push_back(ev.Add(memory(ins.a), memory(ins.b)));
        break;
      case Op::kSub:
        mem.push_back(ev.Sub(memory(ins.a), memory(ins.b)));
        break;
      case Op::kCMul:
        mem.push_back(ev.CMul(ins.k, memory(ins.a)));
        break;
      case Op::kAddInputs: {
        auto sum = ev.AddCt(input(ins.a), input(ins.b));
        inputs.push_back(std::move(sum));
        break;
      }
    }
  }
  std::vector<Share> out;
  for (size_t slot : program.outputs) out.push_back(ev.Output(memory(slot)));
  return out;
}

}  // namespace hssdt

#endif  // HSSDT_HSS_RMS_PROGRAM_H_
