// Copyright 2026 The qec-energy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qec/gate_model.hpp"

namespace qec {

struct GateOp {
  GateName gate;
  int q0;
  int q1 = -1;
};

struct ChannelX {
  int qubit;
};

struct Measure {
  int qubit;
  int clbit;
};

// Matches when clbits[i] equals bit i of value for every i.
struct Condition {
  std::vector<int> clbits;
  std::uint64_t value = 0;
};

struct ConditionalGate {
  GateOp gate;
  Condition condition;
};

struct Barrier {
  std::string label;
};

// Writes the xor of sources into target.
struct Parity {
  std::vector<int> sources;
  int target;
};

// Projects the qubit back to |0>.
struct Reset {
  int qubit;
};

struct Instruction;

// Runs body, then repeats it while any check clbit is 1, at most
// max_attempts times in total. Exhausting the attempts flags the shot.
struct RetryBlock {
  std::vector<Instruction> body;
  std::vector<int> check_clbits;
  int max_attempts = 10;
};

struct Instruction {
  std::variant<GateOp, ChannelX, Measure, ConditionalGate, Barrier, Parity, Reset, RetryBlock> op;
};

enum class ReadoutRule { Majority, Single };

struct Readout {
  std::vector<int> clbits;
  ReadoutRule rule = ReadoutRule::Single;
};

int decode_readout(const Readout& r, const std::vector<std::uint8_t>& bits);

class Circuit {
 public:
  Circuit() = default;
  Circuit(int num_qubits, int num_clbits) : num_qubits_(num_qubits), num_clbits_(num_clbits) {}

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::vector<Instruction>& instructions() const { return instructions_; }
  const std::optional<Readout>& readout() const { return readout_; }

  Circuit& gate(GateName g, int q);
  Circuit& gate(GateName g, int q0, int q1);
  Circuit& channel_x(int q);
  Circuit& measure(int q, int c);
  Circuit& conditional(GateOp g, Condition cond);
  Circuit& barrier(std::string label);
  Circuit& parity(std::vector<int> sources, int target);
  Circuit& reset(int q);
  Circuit& retry(RetryBlock block);
  Circuit& append(Instruction inst);
  // Appends other's instructions; registers grow to cover both and other's
  // readout wins when set.
  Circuit& append(const Circuit& other);
  Circuit& set_readout(Readout r);
  void resize(int num_qubits, int num_clbits);

  // Throws std::invalid_argument describing the first malformed instruction.
  void validate() const;
  std::string dump() const;

 private:
  int num_qubits_ = 0;
  int num_clbits_ = 0;
  std::vector<Instruction> instructions_;
  std::optional<Readout> readout_;
};

Circuit concatenate(const Circuit& a, const Circuit& b);

struct GateTally {
  std::map<GateName, int> gates;
  int conditional_gates = 0;
  int channel_errors = 0;
  int measurements = 0;

  int count(GateName g) const;
  int total_gates() const;
};

// Retry bodies are counted once.
GateTally tally(const Circuit& c);

}  // namespace qec
