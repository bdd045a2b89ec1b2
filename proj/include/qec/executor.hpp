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
#include <vector>

#include "qec/circuit.hpp"
#include "qec/gate_model.hpp"
#include "qec/rational.hpp"
#include "qec/rng.hpp"

namespace qec {

struct ShotOutcome {
  std::vector<std::uint8_t> classical_bits;
  int logical_bit = 0;
  // Mean over the readout measurements of <Z> just before each collapse.
  double final_expectation_z = 0;
  // Set when a retry block ran out of attempts.
  bool flagged = false;
};

ShotOutcome execute_shot(const Circuit& circuit, const NoiseModel& noise, Rng& rng);

// Same as execute_shot but skips validation; the circuit must already be valid.
ShotOutcome execute_shot_unchecked(const Circuit& circuit, const NoiseModel& noise, Rng& rng);

int ideal_outcome(const Circuit& circuit);

// Unconditional gates only; corrections, channel errors and measurements are free.
EnergyBudget circuit_energy(const Circuit& circuit, double epsilon);
Rational circuit_energy_coefficient(const Circuit& circuit);

// Runs the circuit noiselessly on the full register without measurement
// compaction and returns the final state. Measurements are sampled from
// rng. Intended for invariant checks on small circuits.
StateVector evolve(const Circuit& circuit, Rng& rng, const NoiseModel& noise = {});

}  // namespace qec
