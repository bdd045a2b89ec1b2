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

#include "qec/ft_readout.hpp"

#include <algorithm>
#include <stdexcept>

#include "qec/analytics.hpp"
#include "qec/executor.hpp"

namespace qec {

void FtConfig::validate() const {
  if (validation_rounds < 0) throw std::invalid_argument("validation rounds must be >= 0");
  if (retry_cap < 1) throw std::invalid_argument("retry cap must be >= 1");
}

FtLayout ft_layout(int n, const FtConfig& cfg) {
  return FtLayout{n, cfg.cat_count(n), cfg.validation_rounds};
}

Circuit build_cat_state_prep(int v, const CatLayout& l, int retry_cap) {
  if (v < 0) throw std::invalid_argument("validation rounds must be >= 0");
  const int nq = std::max({l.a, l.b, l.f}) + 1;
  Circuit body(nq, l.first_check_clbit + v);
  body.reset(l.a).reset(l.b);
  body.gate(GateName::H, l.a).gate(GateName::CX, l.a, l.b);
  RetryBlock block;
  for (int r = 0; r < v; ++r) {
    body.reset(l.f);
    body.gate(GateName::CX, l.a, l.f).gate(GateName::CX, l.b, l.f);
    body.measure(l.f, l.first_check_clbit + r);
    block.check_clbits.push_back(l.first_check_clbit + r);
  }
  block.body = body.instructions();
  block.max_attempts = retry_cap;
  Circuit c(nq, l.first_check_clbit + v);
  c.retry(std::move(block));
  return c;
}

Circuit build_ft_syndrome_extraction(int n, const FtConfig& cfg) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("FT readout needs an odd code size >= 3");
  cfg.validate();
  const FtLayout L = ft_layout(n, cfg);
  Circuit c(L.num_qubits(), L.num_clbits());
  for (int j = 0; j < L.cats; ++j) {
    const int base = L.cat_clbit(j);
    c.append(build_cat_state_prep(L.v, CatLayout{L.cat_a(j), L.cat_b(j), L.verifier(), base + 2},
                                  cfg.retry_cap));
    c.gate(GateName::CX, j, L.cat_a(j));
    c.gate(GateName::CX, (j + 1) % n, L.cat_b(j));
    c.measure(L.cat_a(j), base).measure(L.cat_b(j), base + 1);
    c.parity({base, base + 1}, L.parity_clbit(j));
  }
  c.resize(L.num_qubits(), L.num_clbits());
  return c;
}

Circuit build_ft_protected_computation(int n, const FtConfig& cfg, EncoderVariant encoder,
                                       const PipelineOptions& opts) {
  const CodeSpec code = make_repetition(n, encoder);
  const FtLayout L = ft_layout(n, cfg);
  Circuit c = build_encoder(code);
  c.resize(L.num_qubits(), L.num_clbits());
  if (opts.channel) {
    for (int q = 0; q < n; ++q) c.channel_x(q);
  }
  for (const auto& e : opts.injected) {
    if (e.qubit < 0 || e.qubit >= n) throw std::invalid_argument("injected error on a non-data qubit");
    c.gate(e.pauli == 'X' ? GateName::X : e.pauli == 'Y' ? GateName::Y : GateName::Z, e.qubit);
  }
  if (opts.logical_x) c.append(build_logical_x(code));
  c.append(build_ft_syndrome_extraction(n, cfg));
  // The first n - 1 parities are the chain stabilizers, so the ordinary
  // correction table applies unchanged.
  c.append(build_corrections(code));
  Readout r{{}, ReadoutRule::Majority};
  for (int q = 0; q < n; ++q) {
    c.measure(q, L.readout_clbit(q));
    r.clbits.push_back(L.readout_clbit(q));
  }
  c.set_readout(r);
  c.resize(L.num_qubits(), L.num_clbits());
  return c;
}

Rational cat_state_coefficient(int v) { return circuit_energy_coefficient(build_cat_state_prep(v)); }

Rational ft_overhead_coefficient(int n, int v) {
  if (v < 0 || n < 1) throw std::invalid_argument("ft_overhead_coefficient: need n >= 1, v >= 0");
  const Rational h = gate_energy_coefficient(gate_catalog(GateName::H));
  const Rational cx = gate_energy_coefficient(gate_catalog(GateName::CX));
  const Rational prep = h + (1 + 2 * v) * cx;
  const Rational couple = 2 * cx + h;
  return n * (prep + couple);
}

Rational ft_budget_ratio(int n, int v) {
  const Rational base = repetition_energy_coefficient(n);
  return (base + ft_overhead_coefficient(n, v)) / base;
}

Rational ft_budget_ratio_limit(int v) {
  // Both budgets are linear in n; the limit is the ratio of slopes.
  const Rational base_slope = repetition_energy_coefficient(5) - repetition_energy_coefficient(3);
  const Rational over_slope = ft_overhead_coefficient(5, v) - ft_overhead_coefficient(3, v);
  return (base_slope + over_slope) / base_slope;
}

}  // namespace qec
