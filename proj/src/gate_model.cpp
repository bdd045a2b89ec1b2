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

#include "qec/gate_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qec {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

Matrix m2(const Matrix2& m) { return Matrix(m); }

Matrix identity(int n) { return Matrix::Identity(n, n); }

GeneratorTerm term(double lambda, Rational lambda_sq, Matrix g, std::string label) {
  return GeneratorTerm{lambda, std::move(lambda_sq), std::move(g), std::move(label)};
}

Matrix controlled(const Matrix2& target) {
  Matrix u = Matrix::Zero(4, 4);
  u.block<2, 2>(0, 0) = Matrix2::Identity();
  u.block<2, 2>(2, 2) = target;
  return u;
}

GateSpec single_pauli(GateName name, char p) {
  const Matrix P = m2(pauli_matrix(p));
  return GateSpec{name, 1, P,
                  {term(kPi / 2, Rational(1, 4), P, std::string(1, p)),
                   term(kPi / 2, Rational(1, 4), -identity(2), "-I")}};
}

GateSpec two_qubit_controlled(GateName name, char p) {
  const Matrix I = identity(2);
  const Matrix Z = m2(pauli_matrix('Z'));
  const Matrix P = m2(pauli_matrix(p));
  const std::string tp(1, p);
  return GateSpec{name, 2, controlled(pauli_matrix(p)),
                  {term(-kPi / 4, Rational(1, 16), kron(I, I), "II"),
                   term(kPi / 4, Rational(1, 16), kron(Z, I), "ZI"),
                   term(kPi / 4, Rational(1, 16), kron(I, P), "I" + tp),
                   term(-kPi / 4, Rational(1, 16), kron(Z, P), "Z" + tp)}};
}

std::vector<GateSpec> build_catalog() {
  std::vector<GateSpec> cat;
  cat.push_back(single_pauli(GateName::X, 'X'));
  cat.push_back(single_pauli(GateName::Y, 'Y'));
  cat.push_back(single_pauli(GateName::Z, 'Z'));

  const Matrix had = m2((pauli_matrix('X') + pauli_matrix('Z')) / std::sqrt(2.0));
  cat.push_back(GateSpec{GateName::H, 1, had,
                         {term(kPi / 2, Rational(1, 4), had, "(X+Z)/sqrt2"),
                          term(kPi / 2, Rational(1, 4), -identity(2), "-I")}});

  // The identity term carries +pi/2 so that the exponential is Q itself
  // rather than -Q.
  const Matrix q = m2((pauli_matrix('Z') + pauli_matrix('Y')) / std::sqrt(2.0));
  const double qz = -kPi / std::sqrt(8.0);
  cat.push_back(GateSpec{GateName::Q, 1, q,
                         {term(kPi / 2, Rational(1, 4), identity(2), "I"),
                          term(qz, Rational(1, 8), m2(pauli_matrix('Z')), "Z"),
                          term(qz, Rational(1, 8), m2(pauli_matrix('Y')), "Y")}});

  Matrix s(2, 2);
  s << C(1), C(0), C(0), C(0, 1);
  Matrix sgen = (m2(pauli_matrix('Z')) - identity(2)) / 2.0;
  cat.push_back(GateSpec{GateName::S, 1, s, {term(kPi / 2, Rational(1, 4), sgen, "(Z-I)/2")}});

  cat.push_back(two_qubit_controlled(GateName::CX, 'X'));
  cat.push_back(two_qubit_controlled(GateName::CY, 'Y'));
  cat.push_back(two_qubit_controlled(GateName::CZ, 'Z'));
  return cat;
}

const std::vector<GateSpec>& catalog() {
  static const std::vector<GateSpec> cat = build_catalog();
  return cat;
}

}  // namespace

std::string_view gate_label(GateName g) {
  switch (g) {
    case GateName::X: return "X";
    case GateName::Y: return "Y";
    case GateName::Z: return "Z";
    case GateName::H: return "H";
    case GateName::Q: return "Q";
    case GateName::S: return "S";
    case GateName::CX: return "CX";
    case GateName::CY: return "CY";
    case GateName::CZ: return "CZ";
  }
  return "?";
}

std::optional<GateName> parse_gate_name(std::string_view s) {
  for (GateName g : kAllGates) {
    if (gate_label(g) == s) return g;
  }
  return std::nullopt;
}

int gate_arity(GateName g) {
  return (g == GateName::CX || g == GateName::CY || g == GateName::CZ) ? 2 : 1;
}

Matrix2 pauli_matrix(char p) {
  Matrix2 m;
  switch (p) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument(std::string("pauli_matrix: unknown Pauli '") + p + "'");
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::vector<double> GateSpec::multiset() const {
  std::vector<double> out;
  for (const auto& t : terms) out.push_back(t.lambda);
  return out;
}

Matrix GateSpec::generator_sum() const {
  const int d = arity == 1 ? 2 : 4;
  Matrix g = Matrix::Zero(d, d);
  for (const auto& t : terms) g += t.lambda * t.generator;
  return g;
}

void NoiseModel::validate() const {
  if (!(epsilon >= 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("noise model: epsilon must be finite and >= 0");
  }
  if (!(p_x >= 0 && p_x <= 1)) throw std::invalid_argument("noise model: p_x must lie in [0, 1]");
}

const GateSpec& gate_catalog(GateName name) { return catalog().at(std::size_t(name)); }

const GateSpec& gate_catalog(std::string_view name) {
  if (auto g = parse_gate_name(name)) return gate_catalog(*g);
  throw std::invalid_argument("unknown gate '" + std::string(name) +
                              "'; expected one of X, Y, Z, H, Q, S, CX, CY, CZ");
}

Rational gate_energy_coefficient(const GateSpec& spec) {
  Rational sum = 0;
  for (const auto& t : spec.terms) sum += t.lambda_sq;
  return sum / 4;
}

EnergyBudget gate_energy_bound(const GateSpec& spec, double epsilon) {
  if (epsilon == 0) throw DivergentBound("gate energy bound diverges at epsilon = 0");
  if (!(epsilon > 0)) throw std::invalid_argument("gate_energy_bound: epsilon must be > 0");
  double sum = 0;
  for (const auto& t : spec.terms) sum += t.lambda * t.lambda;
  return EnergyBudget{sum / (4 * epsilon * epsilon)};
}

Matrix sample_noisy_gate(const GateSpec& spec, double epsilon, Rng& rng) {
  if (!(epsilon >= 0)) throw std::invalid_argument("sample_noisy_gate: epsilon must be >= 0");
  if (epsilon == 0) return spec.ideal_unitary;
  std::normal_distribution<double> noise(0.0, epsilon);
  const int d = spec.arity == 1 ? 2 : 4;
  Matrix g = Matrix::Zero(d, d);
  for (const auto& t : spec.terms) g += (t.lambda + noise(rng)) * t.generator;
  return herm_expm(g);
}

double average_gate_fidelity(const Matrix& u, const Matrix& u_prime) {
  if (u.rows() != u_prime.rows() || u.cols() != u_prime.cols() || u.rows() != u.cols()) {
    throw std::invalid_argument("average_gate_fidelity: dimension mismatch");
  }
  const double n = double(u.rows());
  const double overlap = std::norm((u.adjoint() * u_prime).trace());
  return std::clamp((n + overlap) / (n * (n + 1)), 0.0, 1.0);
}

GateErrorEstimate estimate_gate_error(const GateSpec& spec, double epsilon,
                                      std::uint64_t samples, Rng& rng) {
  if (samples < 100) throw std::invalid_argument("estimate_gate_error: samples must be >= 100");
  if (!(epsilon >= 0)) throw std::invalid_argument("estimate_gate_error: epsilon must be >= 0");
  if (epsilon == 0) return {0.0, 0.0};
  double sum = 0, sum_sq = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double e = 1 - average_gate_fidelity(spec.ideal_unitary, sample_noisy_gate(spec, epsilon, rng));
    sum += e;
    sum_sq += e * e;
  }
  const double n = double(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1));
  return {mean, std::sqrt(var / n)};
}

}  // namespace qec
