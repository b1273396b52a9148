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

#include "hssdt/hss/rms_program.h"

namespace hssdt {

using Op = RmsInstruction::Op;

size_t RmsProgram::GateCount() const {
  size_t n = 0;
  for (const auto& ins : code) {
    if (ins.op == Op::kMul || ins.op == Op::kConvertInput) ++n;
  }
  return n;
}

std::vector<BigInt> EvalPlain(const RmsProgram& program,
                              const std::vector<BigInt>& inputs_in) {
  if (inputs_in.size() != program.num_inputs) {
    Fail(ErrorCode::kDomain, "program input count mismatch");
  }
  std::vector<BigInt> in = inputs_in;
  std::vector<BigInt> mem;
  auto at = [](const std::vector<BigInt>& v, size_t i) -> const BigInt& {
    if (i >= v.size()) Fail(ErrorCode::kDomain, "bad slot");
    return v[i];
  };
  for (const auto& ins : program.code) {
    switch (ins.op) {
      case Op::kTrivialOne:
        mem.push_back(1);
        break;
      case Op::kConvertInput:
        mem.push_back(at(in, ins.a));
        break;
      case Op::kMul:
        mem.push_back(at(in, ins.a) * at(mem, ins.b));
        break;
      case Op::kAdd:
        mem.push_back(at(mem, ins.a) + at(mem, ins.b));
        break;
      case Op::kSub:
        mem.push_back(at(mem, ins.a) - at(mem, ins.b));
        break;
      case Op::kCMul:
        mem.push_back(ins.k * at(mem, ins.a));
        break;
      case Op::kAddInputs: {
        BigInt s = at(in, ins.a) + at(in, ins.b);
        in.push_back(s);
        break;
      }
    }
  }
  std::vector<BigInt> out;
  for (size_t slot : program.outputs) out.push_back(at(mem, slot));
  return out;
}

RmsProgram RandomProgram(RandomSource& rng, size_t max_gates, size_t bound_bits,
                         std::vector<BigInt>* inputs) {
  RmsProgram p;
  p.num_inputs = 1 + rng.UniformU64(4);
  std::vector<BigInt> in;
  for (size_t i = 0; i < p.num_inputs; ++i) {
    in.push_back(FromInt64(static_cast<int64_t>(rng.UniformU64(513)) - 256));
  }
  *inputs = in;
  std::vector<BigInt> mem;
  const BigInt bound = BigInt(1) << bound_bits;
  auto fits = [&](const BigInt& v) { return abs(v) < bound; };
  auto emit = [&](RmsInstruction ins, BigInt value) {
    if (!fits(value)) return;
    if (ins.op == Op::kAddInputs) {
      in.push_back(value);
    } else {
      mem.push_back(value);
    }
    p.code.push_back(std::move(ins));
  };

  size_t gates = 0;
  size_t target_gates = 1 + rng.UniformU64(max_gates);
  size_t steps = 0;
  while (gates < target_gates && steps++ < 8 * max_gates) {
    uint64_t choice = mem.empty() ? 0 : rng.UniformU64(7);
    size_t ia = rng.UniformU64(in.size());
    size_t ib = rng.UniformU64(in.size());
    size_t ma = mem.empty() ? 0 : rng.UniformU64(mem.size());
    size_t mb = mem.empty() ? 0 : rng.UniformU64(mem.size());
    switch (choice) {
      case 0:
        emit({Op::kConvertInput, ia, 0, 0}, in[ia]);
        ++gates;
        break;
      case 1:
      case 2: {
        size_t before = mem.size();
        emit({Op::kMul, ia, mb, 0}, in[ia] * mem[mb]);
        if (mem.size() > before) ++gates;
        break;
      }
      case 3:
        emit({Op::kAdd, ma, mb, 0}, mem[ma] + mem[mb]);
        break;
      case 4:
        emit({Op::kSub, ma, mb, 0}, mem[ma] - mem[mb]);
        break;
      case 5: {
        BigInt k = FromInt64(static_cast<int64_t>(rng.UniformU64(33)) - 16);
        emit({Op::kCMul, ma, 0, k}, k * mem[ma]);
        break;
      }
      case 6:
        if (rng.UniformU64(2) == 0) {
          emit({Op::kTrivialOne, 0, 0, 0}, 1);
        } else {
          emit({Op::kAddInputs, ia, ib, 0}, in[ia] + in[ib]);
        }
        break;
    }
  }
  if (mem.empty()) emit({Op::kConvertInput, 0, 0, 0}, in[0]);
  size_t outputs = 1 + rng.UniformU64(3);
  for (size_t i = 0; i < outputs; ++i) {
    p.outputs.push_back(rng.UniformU64(mem.size()));
  }
  p.outputs.push_back(mem.size() - 1);
  return p;
}

}  // namespace hssdt
