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

#ifndef QGEOM_DENSITY_STATE_HPP_
#define QGEOM_DENSITY_STATE_HPP_

#include <stdexcept>
#include <utility>

#include "qgeom/types.hpp"

namespace qgeom {

// A density matrix: Hermitian, unit trace, positive semidefinite.  The
// checks run at construction and the stored matrix is immutable, so every
// DensityState in flight satisfies the invariants to the tolerances in
// qgeom::tol.
class DensityState {
 public:
  explicit DensityState(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
      throw std::invalid_argument("density matrix must be square");
    }
    if (max_abs(m_ - m_.adjoint()) > tol::kHermitian) {
      throw std::invalid_argument("hermiticity violated");
    }
    if (std::abs(m_.trace() - Complex{1.0, 0.0}) > tol::kTrace) {
      throw std::invalid_argument("unit trace violated");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m_,
                                              Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < tol::kEigenvalueFloor) {
      throw std::invalid_argument("positivity violated");
    }
  }

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  double purity() const { return (m_ * m_).trace().real(); }

 private:
  CMatrix m_;
};

inline DensityState make_density(CMatrix m) {
  return DensityState(std::move(m));
}

}  // namespace qgeom

#endif  // QGEOM_DENSITY_STATE_HPP_
