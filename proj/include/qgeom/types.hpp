// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGEOM_TYPES_HPP_
#define QGEOM_TYPES_HPP_

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace qgeom {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr Complex kImag{0.0, 1.0};

namespace tol {

// Validation thresholds for constructing checked types.
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

}  // namespace tol

// Pauli matrices; index 0 is the 2x2 identity.
inline CMatrix pauli(int k) {
  CMatrix m(2, 2);
  switch (k) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kImag, kImag, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli index out of range");
  }
  return m;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

inline CVector kron(const CVector& a, const CVector& b) {
  return Eigen::kroneckerProduct(a, b);
}

inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace qgeom

#endif  // QGEOM_TYPES_HPP_
