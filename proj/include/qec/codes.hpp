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
#include <string>
#include <vector>

#include "qec/circuit.hpp"

namespace qec {

enum class CodeFamily { Bare, Repetition, Perfect5, Steane7 };

enum class EncoderVariant { None, Waterfall, Direct, Parallel, A, B, C, Standard };

std::string variant_label(EncoderVariant v);

using Syndrome = std::vector<std::uint8_t>;

struct Correction {
  int qubit;
  char pauli;

  bool operator==(const Correction&) const = default;
};

// Pauli strings index data qubits left to right.
struct CodeSpec {
  CodeFamily family = CodeFamily::Bare;
  int n = 1;
  EncoderVariant variant = EncoderVariant::None;
  std::vector<std::string> stabilizers;
  std::string logical_x;
  std::map<Syndrome, std::vector<Correction>> correction_table;

  int num_stabilizers() const { return int(stabilizers.size()); }
};

CodeSpec make_bare();
CodeSpec make_repetition(int n, EncoderVariant variant);
CodeSpec make_perfect5(EncoderVariant variant);
CodeSpec make_steane7();

// Bit i is 1 when the error anticommutes with stabilizer i.
Syndrome syndrome_of(const CodeSpec& code, const std::string& error);
bool commutes(const std::string& a, const std::string& b);

struct CorrectionResult {
  std::vector<Correction> ops;
  bool uncorrectable = false;
};

CorrectionResult correction_for_syndrome(const CodeSpec& code, const Syndrome& syndrome);

// Register layout shared by the builders: data qubits 0..n-1, then one
// ancilla per stabilizer. Syndrome clbits 0..s-1, readout clbits after.
int ancilla_qubit(const CodeSpec& code, int stabilizer);
int syndrome_clbit(int stabilizer);
int readout_clbit(const CodeSpec& code, int index);
int total_qubits(const CodeSpec& code);
int total_clbits(const CodeSpec& code);

Circuit build_encoder(const CodeSpec& code);
Circuit build_inverse_encoder(const CodeSpec& code);
Circuit build_syndrome_extraction(const CodeSpec& code);
Circuit build_corrections(const CodeSpec& code);
Circuit build_logical_x(const CodeSpec& code);
Circuit build_readout(const CodeSpec& code);

struct InjectedError {
  int qubit;
  char pauli;
};

struct PipelineOptions {
  bool logical_x = true;
  bool channel = true;
  // Applied as ideal Pauli gates right after the channel slot.
  std::vector<InjectedError> injected;
};

Circuit build_protected_computation(const CodeSpec& code, bool include_logical_x = true);
Circuit build_protected_computation(const CodeSpec& code, const PipelineOptions& opts);

}  // namespace qec
