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

#include "qec/registry.hpp"

#include <regex>
#include <stdexcept>

#include "qec/executor.hpp"

namespace qec {

namespace {

EncoderVariant parse_rep_variant(const std::string& s) {
  if (s.empty() || s == "direct") return EncoderVariant::Direct;
  if (s == "waterfall") return EncoderVariant::Waterfall;
  if (s == "parallel") return EncoderVariant::Parallel;
  throw std::invalid_argument("unknown repetition encoder '" + s + "'");
}

[[noreturn]] void unknown(std::string_view id) {
  throw std::invalid_argument("unregistered code id '" + std::string(id) +
                              "'; expected bare, repN[:encoder][:ft(v=K)[:chain]], perfect5[:a|b|c], steane7 or gate:<NAME>");
}

CodeEntry pipeline(std::string id, const CodeSpec& code) {
  CodeEntry e;
  e.id = std::move(id);
  e.encoder_variant = variant_label(code.variant);
  e.circuit = build_protected_computation(code, true);
  e.energy_coefficient = circuit_energy_coefficient(e.circuit);
  if (code.family == CodeFamily::Bare) e.repetition_size = 1;
  if (code.family == CodeFamily::Repetition) e.repetition_size = code.n;
  return e;
}

}  // namespace

CodeEntry lookup_code(std::string_view id_view) {
  const std::string id(id_view);
  static const std::regex rep_re(R"(rep(\d+)(?::(waterfall|direct|parallel))?(?::ft\(v=(\d+)\)(:chain)?)?)");
  static const std::regex perfect_re(R"(perfect5(?::([abc]))?)");
  static const std::regex gate_re(R"(gate:([A-Z]+))");
  std::smatch m;
  if (id == "bare") return pipeline(id, make_bare());
  if (id == "steane7") return pipeline(id, make_steane7());
  if (std::regex_match(id, m, perfect_re)) {
    const std::string v = m[1].matched ? m[1].str() : "a";
    const EncoderVariant var = v == "a" ? EncoderVariant::A : v == "b" ? EncoderVariant::B : EncoderVariant::C;
    return pipeline(id, make_perfect5(var));
  }
  if (std::regex_match(id, m, rep_re)) {
    if (m[1].length() > 2) unknown(id);
    const int n = std::stoi(m[1].str());
    const EncoderVariant var = parse_rep_variant(m[2].str());
    if (!m[3].matched) return pipeline(id, make_repetition(n, var));
    if (m[3].length() > 2) unknown(id);
    FtConfig cfg;
    cfg.validation_rounds = std::stoi(m[3].str());
    cfg.ring = !m[4].matched;
    CodeEntry e;
    e.id = id;
    e.encoder_variant = variant_label(var);
    e.circuit = build_ft_protected_computation(n, cfg, var);
    e.energy_coefficient = circuit_energy_coefficient(e.circuit);
    e.repetition_size = n;
    e.fault_tolerant = true;
    return e;
  }
  if (std::regex_match(id, m, gate_re)) {
    const auto g = parse_gate_name(m[1].str());
    if (!g) unknown(id);
    CodeEntry e;
    e.id = id;
    e.encoder_variant = "none";
    e.kind = TargetKind::Gate;
    e.gate = *g;
    e.energy_coefficient = gate_energy_coefficient(gate_catalog(*g));
    return e;
  }
  unknown(id);
}

bool is_registered(std::string_view id) {
  try {
    lookup_code(id);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<std::string> example_code_ids() {
  return {"bare",       "rep3:direct", "rep5:waterfall", "rep7:parallel",       "perfect5:a",
          "perfect5:b", "perfect5:c",  "steane7",        "rep3:direct:ft(v=1)", "gate:X"};
}

}  // namespace qec
