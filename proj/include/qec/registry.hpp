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

#include <string>
#include <string_view>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/codes.hpp"
#include "qec/ft_readout.hpp"
#include "qec/rational.hpp"

namespace qec {

enum class TargetKind { Pipeline, Gate };

// A sweep target resolved from its string id.
//   bare
//   repN, repN:{waterfall|direct|parallel}
//   repN:<encoder>:ft(v=K), with a :chain suffix for N - 1 cats
//   perfect5, perfect5:{a|b|c}
//   steane7
//   gate:<NAME>   single catalog gate, scored by average gate infidelity
struct CodeEntry {
  std::string id;
  std::string encoder_variant;
  TargetKind kind = TargetKind::Pipeline;
  Circuit circuit;
  GateName gate = GateName::X;
  // Energy coefficient in units of pi^2 / eps^2.
  Rational energy_coefficient;
  // 1 for the bare qubit, N for repetition codes, 0 otherwise.
  int repetition_size = 0;
  bool fault_tolerant = false;
};

CodeEntry lookup_code(std::string_view id);
bool is_registered(std::string_view id);
std::vector<std::string> example_code_ids();

}  // namespace qec
