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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qec/herm_expm.hpp"
#include "qec/rational.hpp"
#include "qec/rng.hpp"
#include "qec/statevector.hpp"

namespace qec {

enum class GateName { X, Y, Z, H, Q, S, CX, CY, CZ };

inline constexpr std::array<GateName, 9> kAllGates = {
    GateName::X, GateName::Y, GateName::Z,  GateName::H,  GateName::Q,
    GateName::S, GateName::CX, GateName::CY, GateName::CZ};

std::string_view gate_label(GateName g);
std::optional<GateName> parse_gate_name(std::string_view s);
int gate_arity(GateName g);

// lambda is in radians. lambda_sq is lambda^2 / pi^2, kept exact for the
// energy table.
struct GeneratorTerm {
  double lambda;
  Rational lambda_sq;
  Matrix generator;
  std::string label;
};

struct GateSpec {
  GateName name;
  int arity;
  Matrix ideal_unitary;
  std::vector<GeneratorTerm> terms;

  std::vector<double> multiset() const;
  Matrix generator_sum() const;
};

struct NoiseModel {
  double epsilon = 0;
  double p_x = 0;

  void validate() const;
};

// Energy in units of hbar * omega0.
struct EnergyBudget {
  double value = 0;

  EnergyBudget& operator+=(EnergyBudget o) {
    value += o.value;
    return *this;
  }
  friend EnergyBudget operator+(EnergyBudget a, EnergyBudget b) { return a += b; }
};

const GateSpec& gate_catalog(GateName name);
const GateSpec& gate_catalog(std::string_view name);

// Coefficient of pi^2 / eps^2 in the energy bound, exact.
Rational gate_energy_coefficient(const GateSpec& spec);
EnergyBudget gate_energy_bound(const GateSpec& spec, double epsilon);

Matrix sample_noisy_gate(const GateSpec& spec, double epsilon, Rng& rng);

double average_gate_fidelity(const Matrix& u, const Matrix& u_prime);

struct GateErrorEstimate {
  double mean_error;
  double std_error;
};

GateErrorEstimate estimate_gate_error(const GateSpec& spec, double epsilon,
                                      std::uint64_t samples, Rng& rng);

// Pauli matrices and tensor helpers shared by the code builders and tests.
Matrix2 pauli_matrix(char p);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace qec
