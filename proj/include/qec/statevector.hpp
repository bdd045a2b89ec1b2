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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qec/errors.hpp"

namespace qec {

// Qubit 0 is the most significant bit of the basis index.

template <typename Real>
using SmallMatrix =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

using Matrix = SmallMatrix<double>;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr int kMaxQubits = 24;

template <typename Real = double>
class BasicStateVector {
 public:
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
  using Mat4 = Eigen::Matrix<Scalar, 4, 4>;

  // Zero qubits is allowed internally: a single amplitude equal to 1.
  explicit BasicStateVector(int num_qubits = 0, std::uint64_t basis = 0)
      : n_(num_qubits), amps_(Vector::Zero(Eigen::Index(1) << num_qubits)) {
    amps_(Eigen::Index(basis)) = Scalar(1);
  }

  int num_qubits() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }
  Scalar operator[](Eigen::Index i) const { return amps_(i); }

  Real norm() const { return amps_.norm(); }

  void apply(const Mat2& u, int q) {
    const Eigen::Index stride = stride_of(q);
    const Eigen::Index d = dim();
    for (Eigen::Index hi = 0; hi < d; hi += 2 * stride) {
      for (Eigen::Index i = hi; i < hi + stride; ++i) {
        const Scalar a0 = amps_(i), a1 = amps_(i + stride);
        amps_(i) = u(0, 0) * a0 + u(0, 1) * a1;
        amps_(i + stride) = u(1, 0) * a0 + u(1, 1) * a1;
      }
    }
  }

  // u acts on (q0, q1) with q0 as the high bit of the 4x4 index.
  void apply(const Mat4& u, int q0, int q1) {
    const Eigen::Index s0 = stride_of(q0), s1 = stride_of(q1);
    const Eigen::Index d = dim();
    for (Eigen::Index i = 0; i < d; ++i) {
      if ((i & s0) || (i & s1)) continue;
      const Eigen::Index idx[4] = {i, i | s1, i | s0, i | s0 | s1};
      Scalar in[4];
      for (int k = 0; k < 4; ++k) in[k] = amps_(idx[k]);
      for (int r = 0; r < 4; ++r) {
        amps_(idx[r]) = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] +
                        u(r, 3) * in[3];
      }
    }
  }

  // Block-diagonal two-qubit action: b0 on q1 where q0 = 0, b1 where q0 = 1.
  void apply_controlled_pair(const Mat2& b0, const Mat2& b1, int q0, int q1) {
    const Eigen::Index s0 = stride_of(q0), s1 = stride_of(q1);
    const Eigen::Index d = dim();
    for (Eigen::Index hi = 0; hi < d; hi += 2 * s1) {
      for (Eigen::Index i = hi; i < hi + s1; ++i) {
        const Mat2& b = (i & s0) ? b1 : b0;
        const Scalar a0 = amps_(i), a1 = amps_(i + s1);
        amps_(i) = b(0, 0) * a0 + b(0, 1) * a1;
        amps_(i + s1) = b(1, 0) * a0 + b(1, 1) * a1;
      }
    }
  }

  Real probability_one(int q) const {
    const Eigen::Index s = stride_of(q);
    Real p = 0;
    for (Eigen::Index hi = s; hi < dim(); hi += 2 * s) {
      for (Eigen::Index i = hi; i < hi + s; ++i) p += std::norm(amps_(i));
    }
    return p;
  }

  Real expectation_z(int q) const { return Real(1) - 2 * probability_one(q); }

  void collapse(int q, int bit, Real probability) {
    const Eigen::Index s = stride_of(q);
    const Real scale = Real(1) / std::sqrt(std::max(probability, Real(1e-300)));
    for (Eigen::Index i = 0; i < dim(); ++i) {
      const bool one = (i & s) != 0;
      if (one == (bit != 0)) {
        amps_(i) *= scale;
      } else {
        amps_(i) = Scalar(0);
      }
    }
  }

  // New qubit becomes the least significant bit, prepared in |bit>.
  void append_qubit(int bit = 0) {
    Vector next = Vector::Zero(2 * dim());
    for (Eigen::Index i = 0; i < dim(); ++i) next(2 * i + (bit ? 1 : 0)) = amps_(i);
    amps_.swap(next);
    ++n_;
  }

  // Drops qubit q, keeping the slice where it equals bit, multiplied by
  // scale. Passing 1/sqrt(P(bit)) fuses collapse and removal.
  void remove_qubit(int q, int bit, Real scale = Real(1)) {
    const Eigen::Index s = stride_of(q);
    Vector next(dim() / 2);
    Eigen::Index k = 0;
    const Eigen::Index offset = bit ? s : 0;
    for (Eigen::Index hi = 0; hi < dim(); hi += 2 * s) {
      for (Eigen::Index i = hi; i < hi + s; ++i) next(k++) = scale * amps_(i + offset);
    }
    amps_.swap(next);
    --n_;
  }

 private:
  Eigen::Index stride_of(int q) const { return Eigen::Index(1) << (n_ - 1 - q); }

  int n_;
  Vector amps_;
};

using StateVector = BasicStateVector<double>;

template <typename Real = double>
BasicStateVector<Real> init_basis_state(int num_qubits, std::int64_t basis_index) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("init_basis_state: num_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(num_qubits));
  }
  if (basis_index < 0 || basis_index >= (std::int64_t(1) << num_qubits)) {
    throw std::invalid_argument("init_basis_state: basis index " +
                                std::to_string(basis_index) + " out of range");
  }
  return BasicStateVector<Real>(num_qubits, std::uint64_t(basis_index));
}

namespace detail {

inline void check_qubit(int q, int n, const char* who) {
  if (q < 0 || q >= n) {
    throw std::invalid_argument(std::string(who) + ": qubit " + std::to_string(q) +
                                " out of range for " + std::to_string(n) + " qubits");
  }
}

template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - Derived::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace detail

template <typename Real, typename Derived>
void apply_unitary(BasicStateVector<Real>& state, const Eigen::MatrixBase<Derived>& u,
                   const std::vector<int>& targets) {
  const int n = state.num_qubits();
  for (int q : targets) detail::check_qubit(q, n, "apply_unitary");
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw std::invalid_argument("apply_unitary: duplicate target qubits");
  }
  const auto dim = Eigen::Index(1) << targets.size();
  if (targets.empty() || targets.size() > 2 || u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("apply_unitary: matrix size does not match targets");
  }
  if (detail::unitarity_defect(u.eval()) >= 1e-10) {
    throw ContractViolation("apply_unitary: matrix is not unitary within 1e-10");
  }
  if (targets.size() == 1) {
    state.apply(typename BasicStateVector<Real>::Mat2(u), targets[0]);
  } else {
    state.apply(typename BasicStateVector<Real>::Mat4(u), targets[0], targets[1]);
  }
}

template <typename Real>
Real expectation_z(const BasicStateVector<Real>& state, int qubit) {
  detail::check_qubit(qubit, state.num_qubits(), "expectation_z");
  return state.expectation_z(qubit);
}

// Samples a Z-basis outcome and collapses the state in place.
template <typename Real, typename Urbg>
int measure_z(BasicStateVector<Real>& state, int qubit, Urbg& rng) {
  detail::check_qubit(qubit, state.num_qubits(), "measure_z");
  const Real total = state.amplitudes().squaredNorm();
  if (!(total > Real(0))) throw InternalError("measure_z: state has zero norm");
  const Real p1 = std::clamp(state.probability_one(qubit) / total, Real(0), Real(1));
  std::uniform_real_distribution<Real> uniform(0, 1);
  const int bit = uniform(rng) < p1 ? 1 : 0;
  state.collapse(qubit, bit, bit ? p1 * total : (1 - p1) * total);
  return bit;
}

}  // namespace qec
