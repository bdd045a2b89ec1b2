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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qec/gate_model.hpp"
#include "qec/herm_expm.hpp"

namespace qec {
namespace {

using C = std::complex<double>;
using std::numbers::pi;

// Mean of (2/3) sin^2(d) for d ~ N(0, eps^2), by trapezoid quadrature over
// +-12 sigma.
double pauli_infidelity_quadrature(double eps) {
  const int n = 200000;
  const double lo = -12 * eps, h = 24 * eps / n;
  double acc = 0;
  for (int i = 0; i <= n; ++i) {
    const double d = lo + i * h;
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    const double pdf = std::exp(-d * d / (2 * eps * eps)) / (eps * std::sqrt(2 * pi));
    acc += w * pdf * (2.0 / 3.0) * std::sin(d) * std::sin(d);
  }
  return acc * h;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void expect_multiset(const GateSpec& g, std::vector<double> expect) {
  const auto got = sorted(g.multiset());
  expect = sorted(expect);
  ASSERT_EQ(got.size(), expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expect[i], 1e-15);
}

Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

TEST(GateModelTest, CatalogMultisets) {
  expect_multiset(gate_catalog("X"), {pi / 2, pi / 2});
  expect_multiset(gate_catalog("CX"), {pi / 4, pi / 4, -pi / 4, -pi / 4});
  expect_multiset(gate_catalog("S"), {pi / 2});
  expect_multiset(gate_catalog("Q"), {pi / 2, -pi / std::sqrt(8.0), -pi / std::sqrt(8.0)});
  expect_multiset(gate_catalog("H"), {pi / 2, pi / 2});
}

TEST(GateModelTest, UnknownGateListsCatalog) {
  try {
    gate_catalog("T");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("CX, CY, CZ"), std::string::npos);
  }
}

TEST(GateModelTest, GeneratorsReproduceIdealUnitaryWithPhase) {
  for (GateName g : kAllGates) {
    const GateSpec& spec = gate_catalog(g);
    EXPECT_EQ(spec.name, g);
    EXPECT_EQ(spec.arity, gate_arity(g));
    const Matrix u = herm_expm(spec.generator_sum());
    EXPECT_LT((u - spec.ideal_unitary).cwiseAbs().maxCoeff(), 1e-10) << gate_label(g);
    for (const auto& t : spec.terms) EXPECT_TRUE(is_hermitian(t.generator));
  }
  EXPECT_LT((gate_catalog(GateName::CX).ideal_unitary - cnot()).cwiseAbs().maxCoeff(), 1e-15);
  Matrix q = (pauli_matrix('Z') + pauli_matrix('Y')) / std::sqrt(2.0);
  EXPECT_LT((gate_catalog(GateName::Q).ideal_unitary - q).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GateModelTest, EnergyCoefficientsAreExact) {
  const std::map<std::string, Rational> table = {
      {"X", Rational(1, 8)},   {"Y", Rational(1, 8)},   {"Z", Rational(1, 8)},
      {"H", Rational(1, 8)},   {"Q", Rational(1, 8)},   {"S", Rational(1, 16)},
      {"CX", Rational(1, 16)}, {"CY", Rational(1, 16)}, {"CZ", Rational(1, 16)}};
  for (const auto& [name, coef] : table) {
    EXPECT_EQ(gate_energy_coefficient(gate_catalog(name)), coef) << name;
  }
}

TEST(GateModelTest, EnergyBoundValues) {
  EXPECT_NEAR(gate_energy_bound(gate_catalog("X"), 0.1).value, 123.37005501361698, 1e-9);
  EXPECT_NEAR(gate_energy_bound(gate_catalog("CX"), 1.0).value, pi * pi / 16, 1e-12);
  EXPECT_NEAR(gate_energy_bound(gate_catalog("Q"), 0.2).value, pi * pi / (8 * 0.04), 1e-9);
  EXPECT_THROW(gate_energy_bound(gate_catalog("X"), 0.0), DivergentBound);
  EXPECT_THROW(gate_energy_bound(gate_catalog("X"), -1.0), std::invalid_argument);
}

TEST(GateModelTest, EnergyBudgetAdds) {
  EnergyBudget a{1.5};
  a += EnergyBudget{2.0};
  EXPECT_DOUBLE_EQ((a + EnergyBudget{0.5}).value, 4.0);
}

TEST(GateModelTest, FidelityExamples) {
  const Matrix x = pauli_matrix('X');
  const Matrix i2 = Matrix::Identity(2, 2);
  EXPECT_NEAR(average_gate_fidelity(i2, x), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(average_gate_fidelity(cnot(), gate_catalog("CZ").ideal_unitary), 0.4, 1e-15);
  for (GateName g : kAllGates) {
    const Matrix& u = gate_catalog(g).ideal_unitary;
    EXPECT_NEAR(average_gate_fidelity(u, u), 1.0, 1e-15);
  }
  EXPECT_THROW(average_gate_fidelity(i2, cnot()), std::invalid_argument);
}

TEST(GateModelTest, FidelityBoundsAndPhaseInvariance) {
  Rng rng(8);
  std::uniform_real_distribution<double> phase(0, 2 * pi);
  for (int trial = 0; trial < 200; ++trial) {
    const GateSpec& spec = gate_catalog(kAllGates[std::size_t(trial) % kAllGates.size()]);
    const Matrix a = sample_noisy_gate(spec, 1.0, rng);
    const Matrix b = sample_noisy_gate(spec, 1.0, rng);
    const double f = average_gate_fidelity(a, b);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    const Matrix bp = std::polar(1.0, phase(rng)) * b;
    const Matrix ap = std::polar(1.0, phase(rng)) * a;
    EXPECT_NEAR(average_gate_fidelity(a, bp), f, 1e-12);
    EXPECT_NEAR(average_gate_fidelity(ap, b), f, 1e-12);
  }
}

TEST(GateModelTest, NoisyGatesAreUnitary) {
  Rng rng(2);
  for (double eps : {1e-4, 0.05, 0.5, 3.0}) {
    for (GateName g : kAllGates) {
      for (int i = 0; i < 50; ++i) {
        const Matrix u = sample_noisy_gate(gate_catalog(g), eps, rng);
        const auto n = u.rows();
        ASSERT_LT((u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
      }
    }
  }
}

TEST(GateModelTest, ZeroNoiseIsIdeal) {
  Rng rng(1);
  for (GateName g : kAllGates) {
    EXPECT_EQ(sample_noisy_gate(gate_catalog(g), 0.0, rng), gate_catalog(g).ideal_unitary);
    const auto e = estimate_gate_error(gate_catalog(g), 0.0, 100, rng);
    EXPECT_EQ(e.mean_error, 0.0);
    EXPECT_EQ(e.std_error, 0.0);
  }
  EXPECT_THROW(estimate_gate_error(gate_catalog("X"), 0.1, 99, rng), std::invalid_argument);
}

TEST(GateModelTest, SamplingIsDeterministicGivenStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(sample_noisy_gate(gate_catalog("Q"), 0.2, a), sample_noisy_gate(gate_catalog("Q"), 0.2, b));
  }
}

TEST(GateModelTest, QuadratureOracleFrozen) {
  EXPECT_NEAR(pauli_infidelity_quadrature(0.05), (1 - std::exp(-2 * 0.05 * 0.05)) / 3, 1e-12);
  EXPECT_NEAR(pauli_infidelity_quadrature(0.05), 1.66251e-3, 1e-8);
}

TEST(GateModelTest, XInfidelityMatchesQuadrature) {
  Rng rng(12345);
  const auto e = estimate_gate_error(gate_catalog("X"), 0.05, 100000, rng);
  const double oracle = pauli_infidelity_quadrature(0.05);
  EXPECT_NEAR(e.mean_error, oracle, 0.05 * oracle);
  EXPECT_NEAR(e.mean_error, oracle, 4 * e.std_error);
}

TEST(GateModelTest, SmallEpsilonLawForPaulis) {
  Rng rng(777);
  for (const char* g : {"X", "Y", "Z"}) {
    const auto e = estimate_gate_error(gate_catalog(g), 0.01, 100000, rng);
    EXPECT_NEAR(e.mean_error / 1e-4, 2.0 / 3.0, 0.05 * 2.0 / 3.0) << g;
    EXPECT_NEAR(e.mean_error, pauli_infidelity_quadrature(0.01), 4 * e.std_error) << g;
  }
}

TEST(GateModelTest, PauliNoiseSymmetry) {
  for (double eps : {0.02, 0.2}) {
    std::vector<GateErrorEstimate> est;
    Rng rng(31);
    for (const char* g : {"X", "Y", "Z"}) est.push_back(estimate_gate_error(gate_catalog(g), eps, 50000, rng));
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const double se = std::hypot(est[i].std_error, est[j].std_error);
        EXPECT_NEAR(est[i].mean_error, est[j].mean_error, 4 * se) << eps << " " << i << j;
      }
    }
  }
}

TEST(GateModelTest, NoiseModelValidation) {
  EXPECT_NO_THROW((NoiseModel{0.1, 0.5}.validate()));
  EXPECT_THROW((NoiseModel{-0.1, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((NoiseModel{0.1, 1.5}.validate()), std::invalid_argument);
  EXPECT_THROW((NoiseModel{std::nan(""), 0.0}.validate()), std::invalid_argument);
}

}  // namespace
}  // namespace qec
