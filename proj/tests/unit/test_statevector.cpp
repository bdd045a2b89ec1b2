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

#include <cmath>

#include "qec/statevector.hpp"
#include "qec/gate_model.hpp"

namespace qec {
namespace {

using C = std::complex<double>;

Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

TEST(StateVectorTest, BasisStates) {
  auto s = init_basis_state(1, 0);
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s[0], C(1));
  EXPECT_EQ(s[1], C(0));

  auto t = init_basis_state(2, 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(t[i], C(0));
  EXPECT_EQ(t[3], C(1));

  auto u = init_basis_state(3, 5);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(u[i], C(i == 5 ? 1 : 0));
}

TEST(StateVectorTest, BasisStateRejectsBadArguments) {
  EXPECT_THROW(init_basis_state(0, 0), std::invalid_argument);
  EXPECT_THROW(init_basis_state(25, 0), std::invalid_argument);
  EXPECT_THROW(init_basis_state(2, 4), std::invalid_argument);
  EXPECT_THROW(init_basis_state(2, -1), std::invalid_argument);
}

TEST(StateVectorTest, QubitZeroIsMostSignificant) {
  auto s = init_basis_state(3, 0);
  apply_unitary(s, Matrix(pauli_matrix('X')), {0});
  EXPECT_EQ(s[4], C(1));
}

TEST(StateVectorTest, PauliAndIdentityAction) {
  auto s = init_basis_state(1, 0);
  apply_unitary(s, Matrix(pauli_matrix('X')), {0});
  EXPECT_EQ(s[1], C(1));

  auto t = init_basis_state(2, 2);
  t.amplitudes() << C(0.5, 0.1), C(-0.3, 0.2), C(0.6, 0), C(0, 0.4);
  t.amplitudes().normalize();
  const auto before = t.amplitudes();
  apply_unitary(t, Matrix(Matrix::Identity(4, 4)), {0, 1});
  EXPECT_LT((t.amplitudes() - before).norm(), 1e-15);
}

TEST(StateVectorTest, CnotTruthTable) {
  for (int b = 0; b < 4; ++b) {
    auto s = init_basis_state(2, b);
    apply_unitary(s, cnot(), {0, 1});
    const int expect = (b & 2) ? (b ^ 1) : b;
    EXPECT_EQ(s[expect], C(1)) << b;
  }
  auto r = init_basis_state(2, 1);
  apply_unitary(r, cnot(), {1, 0});
  EXPECT_EQ(r[3], C(1));
}

TEST(StateVectorTest, ApplyUnitaryContracts) {
  auto s = init_basis_state(2, 0);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = 2;
  EXPECT_THROW(apply_unitary(s, bad, {0}), ContractViolation);
  EXPECT_THROW(apply_unitary(s, cnot(), {1, 1}), std::invalid_argument);
  EXPECT_THROW(apply_unitary(s, cnot(), {0, 2}), std::invalid_argument);
  EXPECT_THROW(apply_unitary(s, Matrix(pauli_matrix('X')), {0, 1}), std::invalid_argument);
}

TEST(StateVectorTest, ControlledPairMatchesDenseApply) {
  Rng rng(7);
  std::normal_distribution<double> g;
  StateVector a(4);
  for (Eigen::Index i = 0; i < a.dim(); ++i) a.amplitudes()(i) = C(g(rng), g(rng));
  a.amplitudes().normalize();
  StateVector b = a;
  const Matrix u = gate_catalog(GateName::CY).ideal_unitary;
  a.apply(StateVector::Mat4(u), 2, 0);
  b.apply_controlled_pair(u.block<2, 2>(0, 0), u.block<2, 2>(2, 2), 2, 0);
  EXPECT_LT((a.amplitudes() - b.amplitudes()).norm(), 1e-14);
}

TEST(StateVectorTest, ExpectationZ) {
  EXPECT_DOUBLE_EQ(expectation_z(init_basis_state(1, 0), 0), 1.0);
  EXPECT_DOUBLE_EQ(expectation_z(init_basis_state(1, 1), 0), -1.0);
  auto plus = init_basis_state(1, 0);
  apply_unitary(plus, gate_catalog(GateName::H).ideal_unitary, {0});
  EXPECT_NEAR(expectation_z(plus, 0), 0.0, 1e-15);
  EXPECT_THROW(expectation_z(plus, 1), std::invalid_argument);
}

TEST(StateVectorTest, MeasureEigenstate) {
  Rng rng(1);
  auto s = init_basis_state(1, 1);
  EXPECT_EQ(measure_z(s, 0, rng), 1);
  EXPECT_EQ(s[1], C(1));
}

TEST(StateVectorTest, MeasureBellCollapses) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = init_basis_state(2, 0);
    apply_unitary(s, gate_catalog(GateName::H).ideal_unitary, {0});
    apply_unitary(s, cnot(), {0, 1});
    const int bit = measure_z(s, 0, rng);
    const int idx = bit ? 3 : 0;
    EXPECT_NEAR(std::abs(s[idx]), 1.0, 1e-12);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(StateVectorTest, MeasurePlusStatistics) {
  Rng rng(11);
  const Matrix h = gate_catalog(GateName::H).ideal_unitary;
  int ones = 0;
  const int shots = 100000;
  for (int i = 0; i < shots; ++i) {
    auto s = init_basis_state(1, 0);
    apply_unitary(s, h, {0});
    ones += measure_z(s, 0, rng);
  }
  EXPECT_NEAR(double(ones) / shots, 0.5, 0.005);
}

TEST(StateVectorTest, MeasureZeroNormIsInternalError) {
  Rng rng(1);
  StateVector s(1);
  s.amplitudes().setZero();
  EXPECT_THROW(measure_z(s, 0, rng), InternalError);
}

TEST(StateVectorTest, MeasurementMatchesExpectation) {
  Rng rng(5);
  Matrix2 ry;
  const double t = 0.7;
  ry << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  auto ref = init_basis_state(1, 0);
  apply_unitary(ref, Matrix(ry), {0});
  const double p1 = (1 - expectation_z(ref, 0)) / 2;
  const int shots = 100000;
  int ones = 0;
  for (int i = 0; i < shots; ++i) {
    auto s = ref;
    ones += measure_z(s, 0, rng);
  }
  const double se = std::sqrt(p1 * (1 - p1) / shots);
  EXPECT_NEAR(double(ones) / shots, p1, 4 * se);
}

TEST(StateVectorTest, NormPreservedUnderRandomSequence) {
  Rng rng(21);
  std::uniform_int_distribution<int> pick(0, 8), qubit(0, 3);
  auto s = init_basis_state(4, 0);
  for (int step = 0; step < 400; ++step) {
    const GateSpec& spec = gate_catalog(kAllGates[std::size_t(pick(rng))]);
    const Matrix u = sample_noisy_gate(spec, 0.3, rng);
    int q0 = qubit(rng), q1 = qubit(rng);
    while (q1 == q0) q1 = qubit(rng);
    if (spec.arity == 1) {
      apply_unitary(s, u, {q0});
    } else {
      apply_unitary(s, u, {q0, q1});
    }
    if (step % 37 == 0) measure_z(s, q0, rng);
    ASSERT_NEAR(s.norm(), 1.0, 1e-9);
  }
}

TEST(StateVectorTest, AppendAndRemoveQubit) {
  auto s = init_basis_state(2, 2);
  s.append_qubit(1);
  EXPECT_EQ(s.num_qubits(), 3);
  EXPECT_EQ(s[5], C(1));
  s.remove_qubit(0, 1);
  EXPECT_EQ(s.num_qubits(), 2);
  EXPECT_EQ(s[1], C(1));
}

}  // namespace
}  // namespace qec
