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

#include "qec/codes.hpp"

#include <stdexcept>

namespace qec {

namespace {

GateName pauli_gate(char p) {
  switch (p) {
    case 'X': return GateName::X;
    case 'Y': return GateName::Y;
    case 'Z': return GateName::Z;
  }
  throw std::invalid_argument(std::string("not a Pauli: ") + p);
}

GateName controlled_pauli_gate(char p) {
  switch (p) {
    case 'X': return GateName::CX;
    case 'Y': return GateName::CY;
    case 'Z': return GateName::CZ;
  }
  throw std::invalid_argument(std::string("not a Pauli: ") + p);
}

std::string single_pauli(int n, int q, char p) {
  std::string s(std::size_t(n), 'I');
  s[std::size_t(q)] = p;
  return s;
}

void build_single_error_table(CodeSpec& code) {
  for (int q = 0; q < code.n; ++q) {
    for (char p : {'X', 'Y', 'Z'}) {
      const Syndrome s = syndrome_of(code, single_pauli(code.n, q, p));
      auto [it, inserted] = code.correction_table.emplace(s, std::vector<Correction>{{q, p}});
      if (!inserted) throw InternalError("single-qubit errors share a syndrome; code is not distance 3");
    }
  }
}

// Standard-form perfect-code generators: each has an X or Y on exactly one
// pivot among qubits 1..4 and acts on the input qubit 0 otherwise.
struct PivotGenerator {
  int pivot;
  const char* pauli;
};

constexpr PivotGenerator kPerfectPivots[] = {
    {1, "YYZIZ"}, {2, "XIXZZ"}, {3, "XZZXI"}, {4, "YZIZY"}};

void append_perfect_encoder(Circuit& c, EncoderVariant v) {
  // The leading Z fixes the sign so that the encoded |1> equals X_L on the
  // encoded |0>.
  c.gate(GateName::Z, 0);
  std::vector<int> order = {0, 1, 2, 3};
  if (v == EncoderVariant::B) order = {3, 2, 1, 0};
  std::vector<bool> done(5, false);
  for (int idx : order) {
    const auto& g = kPerfectPivots[idx];
    const int p = g.pivot;
    c.gate(GateName::H, p);
    if (g.pauli[p] == 'Y') c.gate(GateName::S, p);
    for (int q = 0; q < 5; ++q) {
      const char ch = g.pauli[q];
      if (q == p || ch == 'I') continue;
      // A CZ onto a pivot that is still |0> does nothing.
      if (v == EncoderVariant::C && q != 0 && !done[std::size_t(q)] && ch == 'Z') continue;
      c.gate(controlled_pauli_gate(ch), p, q);
    }
    done[std::size_t(p)] = true;
  }
}

void append_steane_encoder(Circuit& c) {
  c.gate(GateName::CX, 0, 5).gate(GateName::CX, 0, 6);
  const int targets[3][3] = {{0, 4, 5}, {0, 4, 6}, {4, 5, 6}};
  for (int k = 0; k < 3; ++k) {
    const int p = k + 1;
    c.gate(GateName::H, p);
    for (int t : targets[k]) c.gate(GateName::CX, p, t);
  }
}

Circuit empty_for(const CodeSpec& code) { return Circuit(total_qubits(code), total_clbits(code)); }

}  // namespace

std::string variant_label(EncoderVariant v) {
  switch (v) {
    case EncoderVariant::None: return "none";
    case EncoderVariant::Waterfall: return "waterfall";
    case EncoderVariant::Direct: return "direct";
    case EncoderVariant::Parallel: return "parallel";
    case EncoderVariant::A: return "a";
    case EncoderVariant::B: return "b";
    case EncoderVariant::C: return "c";
    case EncoderVariant::Standard: return "standard";
  }
  return "?";
}

bool commutes(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) throw std::invalid_argument("commutes: Pauli strings differ in length");
  int anti = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) ++anti;
  }
  return anti % 2 == 0;
}

Syndrome syndrome_of(const CodeSpec& code, const std::string& error) {
  Syndrome s;
  for (const auto& g : code.stabilizers) s.push_back(commutes(g, error) ? 0 : 1);
  return s;
}

CodeSpec make_bare() {
  CodeSpec c;
  c.logical_x = "X";
  return c;
}

CodeSpec make_repetition(int n, EncoderVariant variant) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("repetition code size must be odd and >= 3, got " + std::to_string(n));
  }
  if (n > 11) throw std::invalid_argument("repetition code size above 11 is not supported");
  if (variant != EncoderVariant::Waterfall && variant != EncoderVariant::Direct &&
      variant != EncoderVariant::Parallel) {
    throw std::invalid_argument("repetition encoder must be waterfall, direct or parallel");
  }
  CodeSpec c;
  c.family = CodeFamily::Repetition;
  c.n = n;
  c.variant = variant;
  for (int i = 0; i + 1 < n; ++i) {
    std::string g(std::size_t(n), 'I');
    g[std::size_t(i)] = g[std::size_t(i) + 1] = 'Z';
    c.stabilizers.push_back(g);
  }
  c.logical_x = std::string(std::size_t(n), 'X');
  // Each syndrome has two consistent flip patterns, complements of each
  // other; keep the lighter one.
  const int s = n - 1;
  for (std::uint32_t mask = 1; mask < (1U << s); ++mask) {
    std::vector<int> flips(std::size_t(n), 0);
    for (int i = 0; i < s; ++i) flips[std::size_t(i) + 1] = flips[std::size_t(i)] ^ int((mask >> i) & 1U);
    int weight = 0;
    for (int f : flips) weight += f;
    const bool complement = 2 * weight > n;
    std::vector<Correction> ops;
    for (int q = 0; q < n; ++q) {
      if (flips[std::size_t(q)] != int(complement)) ops.push_back({q, 'X'});
    }
    Syndrome syn(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i) syn[std::size_t(i)] = std::uint8_t((mask >> i) & 1U);
    c.correction_table.emplace(std::move(syn), std::move(ops));
  }
  return c;
}

CodeSpec make_perfect5(EncoderVariant variant) {
  if (variant != EncoderVariant::A && variant != EncoderVariant::B && variant != EncoderVariant::C) {
    throw std::invalid_argument("perfect5 encoder variant must be a, b or c");
  }
  CodeSpec c;
  c.family = CodeFamily::Perfect5;
  c.n = 5;
  c.variant = variant;
  c.stabilizers = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  c.logical_x = "XXXXX";
  build_single_error_table(c);
  return c;
}

CodeSpec make_steane7() {
  CodeSpec c;
  c.family = CodeFamily::Steane7;
  c.n = 7;
  c.variant = EncoderVariant::Standard;
  const std::vector<std::vector<int>> supports = {{0, 2, 4, 6}, {1, 2, 5, 6}, {3, 4, 5, 6}};
  for (char p : {'X', 'Z'}) {
    for (const auto& sup : supports) {
      std::string g(7, 'I');
      for (int q : sup) g[std::size_t(q)] = p;
      c.stabilizers.push_back(g);
    }
  }
  c.logical_x = "XXXXXXX";
  build_single_error_table(c);
  return c;
}

CorrectionResult correction_for_syndrome(const CodeSpec& code, const Syndrome& syndrome) {
  if (syndrome.size() != code.stabilizers.size()) {
    throw std::invalid_argument("syndrome length " + std::to_string(syndrome.size()) +
                                " does not match stabilizer count " +
                                std::to_string(code.stabilizers.size()));
  }
  CorrectionResult r;
  bool zero = true;
  for (auto b : syndrome) zero = zero && b == 0;
  if (zero) return r;
  auto it = code.correction_table.find(syndrome);
  if (it == code.correction_table.end()) {
    r.uncorrectable = true;
  } else {
    r.ops = it->second;
  }
  return r;
}

int ancilla_qubit(const CodeSpec& code, int stabilizer) { return code.n + stabilizer; }
int syndrome_clbit(int stabilizer) { return stabilizer; }
int readout_clbit(const CodeSpec& code, int index) { return code.num_stabilizers() + index; }
int total_qubits(const CodeSpec& code) { return code.n + code.num_stabilizers(); }
int total_clbits(const CodeSpec& code) {
  return code.num_stabilizers() + (code.family == CodeFamily::Repetition ? code.n : 1);
}

Circuit build_encoder(const CodeSpec& code) {
  Circuit c = empty_for(code);
  switch (code.family) {
    case CodeFamily::Bare:
      break;
    case CodeFamily::Repetition:
      if (code.variant == EncoderVariant::Waterfall) {
        for (int i = 0; i + 1 < code.n; ++i) c.gate(GateName::CX, i, i + 1);
      } else if (code.variant == EncoderVariant::Direct) {
        for (int i = 1; i < code.n; ++i) c.gate(GateName::CX, 0, i);
      } else {
        int slice = 0;
        for (int width = 1; width < code.n; width *= 2) {
          if (slice > 0) c.barrier("slice " + std::to_string(slice));
          for (int i = 0; i < width && i + width < code.n; ++i) c.gate(GateName::CX, i, i + width);
          ++slice;
        }
      }
      break;
    case CodeFamily::Perfect5:
      append_perfect_encoder(c, code.variant);
      break;
    case CodeFamily::Steane7:
      append_steane_encoder(c);
      break;
  }
  return c;
}

Circuit build_inverse_encoder(const CodeSpec& code) {
  const Circuit fwd = build_encoder(code);
  Circuit c = empty_for(code);
  const auto& list = fwd.instructions();
  for (auto it = list.rbegin(); it != list.rend(); ++it) {
    const auto* g = std::get_if<GateOp>(&it->op);
    if (!g) {
      c.append(*it);
      continue;
    }
    // Every other gate used by the encoders is its own inverse.
    if (g->gate == GateName::S) {
      c.gate(GateName::Z, g->q0).gate(GateName::S, g->q0);
    } else {
      c.append(*it);
    }
  }
  return c;
}

Circuit build_syndrome_extraction(const CodeSpec& code) {
  Circuit c = empty_for(code);
  for (int i = 0; i < code.num_stabilizers(); ++i) {
    const int a = ancilla_qubit(code, i);
    const std::string& g = code.stabilizers[std::size_t(i)];
    if (code.family == CodeFamily::Repetition) {
      c.gate(GateName::CX, i, a).gate(GateName::CX, i + 1, a);
    } else {
      c.gate(GateName::H, a);
      for (int q = 0; q < code.n; ++q) {
        if (g[std::size_t(q)] != 'I') c.gate(controlled_pauli_gate(g[std::size_t(q)]), a, q);
      }
      c.gate(GateName::H, a);
    }
    c.measure(a, syndrome_clbit(i));
  }
  return c;
}

Circuit build_corrections(const CodeSpec& code) {
  Circuit c = empty_for(code);
  std::vector<int> clbits;
  for (int i = 0; i < code.num_stabilizers(); ++i) clbits.push_back(syndrome_clbit(i));
  for (const auto& [syn, ops] : code.correction_table) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < syn.size(); ++i) value |= std::uint64_t(syn[i]) << i;
    for (const auto& op : ops) c.conditional(GateOp{pauli_gate(op.pauli), op.qubit}, Condition{clbits, value});
  }
  return c;
}

Circuit build_logical_x(const CodeSpec& code) {
  Circuit c = empty_for(code);
  for (int q = 0; q < code.n; ++q) c.gate(GateName::X, q);
  return c;
}

Circuit build_readout(const CodeSpec& code) {
  Circuit c = empty_for(code);
  if (code.family == CodeFamily::Repetition) {
    Readout r{{}, ReadoutRule::Majority};
    for (int q = 0; q < code.n; ++q) {
      c.measure(q, readout_clbit(code, q));
      r.clbits.push_back(readout_clbit(code, q));
    }
    c.set_readout(r);
    return c;
  }
  if (code.family != CodeFamily::Bare) c.append(build_inverse_encoder(code));
  c.measure(0, readout_clbit(code, 0));
  c.set_readout(Readout{{readout_clbit(code, 0)}, ReadoutRule::Single});
  return c;
}

Circuit build_protected_computation(const CodeSpec& code, bool include_logical_x) {
  PipelineOptions opts;
  opts.logical_x = include_logical_x;
  return build_protected_computation(code, opts);
}

Circuit build_protected_computation(const CodeSpec& code, const PipelineOptions& opts) {
  Circuit c = build_encoder(code);
  if (opts.channel) {
    for (int q = 0; q < code.n; ++q) c.channel_x(q);
  }
  for (const auto& e : opts.injected) {
    if (e.qubit < 0 || e.qubit >= code.n) throw std::invalid_argument("injected error on a non-data qubit");
    c.gate(pauli_gate(e.pauli), e.qubit);
  }
  if (opts.logical_x) c.append(build_logical_x(code));
  c.append(build_syndrome_extraction(code));
  c.append(build_corrections(code));
  c.append(build_readout(code));
  return c;
}

}  // namespace qec
