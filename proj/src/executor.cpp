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

#include "qec/executor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qec {

namespace {

// Qubits start out classical in |0>. With compaction on, a qubit joins the
// statevector on first quantum use and leaves it again once measured, so the
// amplitude count tracks the live register rather than the whole circuit.
class Engine {
 public:
  Engine(const Circuit& c, const NoiseModel& noise, Rng& rng, bool compact)
      : noise_(noise),
        rng_(rng),
        compact_(compact),
        sv_(compact ? 0 : c.num_qubits()),
        pos_(std::size_t(c.num_qubits()), -1),
        classical_(std::size_t(c.num_qubits()), 0),
        bits_(std::size_t(c.num_clbits()), 0),
        expz_(std::size_t(c.num_clbits()), 0.0) {
    if (!compact_) {
      for (int q = 0; q < c.num_qubits(); ++q) pos_[std::size_t(q)] = q;
    }
  }

  void run(const std::vector<Instruction>& list) {
    for (const auto& inst : list) std::visit(*this, inst.op);
  }

  void operator()(const GateOp& g) { apply_gate(g); }

  void operator()(const ChannelX& c) {
    if (noise_.p_x <= 0) return;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(rng_) >= noise_.p_x) return;
    const int p = pos_[std::size_t(c.qubit)];
    if (p < 0) {
      classical_[std::size_t(c.qubit)] ^= 1;
    } else {
      sv_.apply(pauli_matrix('X'), p);
    }
  }

  void operator()(const Measure& m) {
    bits_[std::size_t(m.clbit)] = std::uint8_t(measure(m.qubit, &expz_[std::size_t(m.clbit)]));
  }

  void operator()(const ConditionalGate& c) {
    const auto& bits = c.condition.clbits;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits_[std::size_t(bits[i])] != ((c.condition.value >> i) & 1U)) return;
    }
    apply_gate(c.gate);
  }

  void operator()(const Barrier&) {}

  void operator()(const Parity& p) {
    std::uint8_t x = 0;
    for (int s : p.sources) x ^= bits_[std::size_t(s)];
    bits_[std::size_t(p.target)] = x;
  }

  void operator()(const Reset& r) {
    const int p = pos_[std::size_t(r.qubit)];
    if (p < 0) {
      classical_[std::size_t(r.qubit)] = 0;
      return;
    }
    double ignored = 0;
    if (measure(r.qubit, &ignored) == 1) {
      if (compact_) {
        classical_[std::size_t(r.qubit)] = 0;
      } else {
        sv_.apply(pauli_matrix('X'), p);
      }
    }
  }

  void operator()(const RetryBlock& r) {
    for (int attempt = 1;; ++attempt) {
      run(r.body);
      bool clean = true;
      for (int c : r.check_clbits) clean = clean && bits_[std::size_t(c)] == 0;
      if (clean) return;
      if (attempt >= r.max_attempts) {
        flagged_ = true;
        return;
      }
    }
  }

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  const std::vector<double>& expz() const { return expz_; }
  bool flagged() const { return flagged_; }
  const StateVector& state() const { return sv_; }

 private:
  int activate(int q) {
    int& p = pos_[std::size_t(q)];
    if (p < 0) {
      sv_.append_qubit(classical_[std::size_t(q)]);
      p = sv_.num_qubits() - 1;
    }
    return p;
  }

  void apply_gate(const GateOp& g) {
    const GateSpec& spec = gate_catalog(g.gate);
    const Matrix u = sample_noisy_gate(spec, noise_.epsilon, rng_);
    if (spec.arity == 1) {
      sv_.apply(Matrix2(u), activate(g.q0));
      return;
    }
    const int p0 = activate(g.q0);
    const int p1 = activate(g.q1);
    if (is_block_diagonal(u)) {
      sv_.apply_controlled_pair(u.block<2, 2>(0, 0), u.block<2, 2>(2, 2), p0, p1);
    } else {
      sv_.apply(StateVector::Mat4(u), p0, p1);
    }
  }

  int measure(int q, double* expz) {
    const int p = pos_[std::size_t(q)];
    if (p < 0) {
      const int bit = classical_[std::size_t(q)];
      *expz = bit ? -1.0 : 1.0;
      return bit;
    }
    if (!compact_) {
      *expz = sv_.expectation_z(p);
      return measure_z(sv_, p, rng_);
    }
    // Same sampling rule as measure_z, with collapse and removal fused.
    const double p1 = std::clamp(sv_.probability_one(p), 0.0, 1.0);
    *expz = 1 - 2 * p1;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const int bit = uniform(rng_) < p1 ? 1 : 0;
    const double prob = bit ? p1 : 1 - p1;
    sv_.remove_qubit(p, bit, 1 / std::sqrt(std::max(prob, 1e-300)));
    pos_[std::size_t(q)] = -1;
    classical_[std::size_t(q)] = std::uint8_t(bit);
    for (int& other : pos_) {
      if (other > p) --other;
    }
    return bit;
  }

  const NoiseModel& noise_;
  Rng& rng_;
  bool compact_;
  StateVector sv_;
  std::vector<int> pos_;
  std::vector<std::uint8_t> classical_;
  std::vector<std::uint8_t> bits_;
  std::vector<double> expz_;
  bool flagged_ = false;
};

void require_readout(const Circuit& c) {
  if (!c.readout()) throw std::invalid_argument("malformed circuit: no readout defined");
}

}  // namespace

ShotOutcome execute_shot_unchecked(const Circuit& circuit, const NoiseModel& noise, Rng& rng) {
  Engine engine(circuit, noise, rng, true);
  engine.run(circuit.instructions());
  ShotOutcome out;
  out.classical_bits = engine.bits();
  out.flagged = engine.flagged();
  const Readout& r = *circuit.readout();
  out.logical_bit = decode_readout(r, out.classical_bits);
  double sum = 0;
  for (int c : r.clbits) sum += engine.expz()[std::size_t(c)];
  out.final_expectation_z = sum / double(r.clbits.size());
  return out;
}

ShotOutcome execute_shot(const Circuit& circuit, const NoiseModel& noise, Rng& rng) {
  noise.validate();
  circuit.validate();
  require_readout(circuit);
  return execute_shot_unchecked(circuit, noise, rng);
}

int ideal_outcome(const Circuit& circuit) {
  circuit.validate();
  require_readout(circuit);
  Rng rng(0x1dea1);
  Engine engine(circuit, NoiseModel{}, rng, true);
  engine.run(circuit.instructions());
  for (int c : circuit.readout()->clbits) {
    if (std::abs(engine.expz()[std::size_t(c)]) <= 1 - 1e-9) {
      throw ContractViolation("ideal_outcome: readout clbit c" + std::to_string(c) +
                              " is not deterministic in the noiseless circuit");
    }
  }
  return decode_readout(*circuit.readout(), engine.bits());
}

Rational circuit_energy_coefficient(const Circuit& circuit) {
  Rational sum = 0;
  for (const auto& [g, k] : tally(circuit).gates) sum += gate_energy_coefficient(gate_catalog(g)) * k;
  return sum;
}

EnergyBudget circuit_energy(const Circuit& circuit, double epsilon) {
  if (epsilon == 0) throw DivergentBound("circuit energy diverges at epsilon = 0");
  if (!(epsilon > 0)) throw std::invalid_argument("circuit_energy: epsilon must be > 0");
  EnergyBudget total;
  for (const auto& [g, k] : tally(circuit).gates) {
    total += EnergyBudget{k * gate_energy_bound(gate_catalog(g), epsilon).value};
  }
  return total;
}

StateVector evolve(const Circuit& circuit, Rng& rng, const NoiseModel& noise) {
  circuit.validate();
  noise.validate();
  Engine engine(circuit, noise, rng, false);
  engine.run(circuit.instructions());
  return engine.state();
}

}  // namespace qec
