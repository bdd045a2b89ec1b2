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
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qec/statevector.hpp"

namespace qec {

namespace detail {

// exp(-i g) for Hermitian 2x2 g = m I + r.sigma.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 2, 2> expm_2x2(const Eigen::MatrixBase<Derived>& g) {
  using C = typename Derived::Scalar;
  using Real = typename C::value_type;
  using M2 = Eigen::Matrix<C, 2, 2>;
  const Real m = (g(0, 0).real() + g(1, 1).real()) / 2;
  const Real rz = (g(0, 0).real() - g(1, 1).real()) / 2;
  const C off = g(1, 0);
  const Real r = std::sqrt(rz * rz + std::norm(off));
  // sin(r)/r, with the series tail near zero.
  const Real sinc = r < Real(1e-4) ? Real(1) - r * r / 6 : std::sin(r) / r;
  M2 traceless;
  traceless << C(rz), std::conj(off), off, C(-rz);
  const C phase = std::polar(Real(1), -m);
  return phase * (std::cos(r) * M2::Identity() - C(0, 1) * sinc * traceless);
}

}  // namespace detail

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& g, double tol = 1e-12) {
  return g.rows() == g.cols() && (g - g.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// True when the off-diagonal 2x2 blocks of a 4x4 matrix are exactly zero.
template <typename Derived>
bool is_block_diagonal(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == 4 && m.cols() == 4 && m.template block<2, 2>(0, 2).isZero(0) &&
         m.template block<2, 2>(2, 0).isZero(0);
}

// Returns exp(-i g). g must be Hermitian, of dimension 2 or 4.
template <typename Real>
SmallMatrix<Real> herm_expm(const SmallMatrix<Real>& g) {
  using C = std::complex<Real>;
  if (g.rows() != g.cols() || (g.rows() != 2 && g.rows() != 4)) {
    throw std::invalid_argument("herm_expm: generator must be 2x2 or 4x4");
  }
  if (!is_hermitian(g)) throw std::invalid_argument("herm_expm: generator is not Hermitian");
  if (g.rows() == 2) return detail::expm_2x2(g);
  SmallMatrix<Real> u = SmallMatrix<Real>::Zero(4, 4);
  if (is_block_diagonal(g)) {
    u.template block<2, 2>(0, 0) = detail::expm_2x2(g.template block<2, 2>(0, 0));
    u.template block<2, 2>(2, 2) = detail::expm_2x2(g.template block<2, 2>(2, 2));
    return u;
  }
  const Eigen::Matrix<C, 4, 4> full = g;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<C, 4, 4>> eig(full);
  if (eig.info() != Eigen::Success) throw InternalError("herm_expm: eigensolver failed");
  const auto phases =
      (eig.eigenvalues().template cast<C>() * C(0, -1)).array().exp().matrix();
  u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  return u;
}

}  // namespace qec
