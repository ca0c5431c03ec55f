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
//
// Geometry of rays: the momentum map into anti-Hermitian matrices, the
// connection along the fibres of the ray projection, the Fubini-Study
// tensor, and the Bloch chart for two-level systems.

#ifndef QGEOM_PROJECTIVE_HPP_
#define QGEOM_PROJECTIVE_HPP_

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qgeom/density_state.hpp"
#include "qgeom/realified.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

// Value of the momentum map: an anti-Hermitian matrix, i.e. an element of
// the unitary algebra paired with observables by <M, A> ~ Tr(M A).
class AntiHermitianMoment {
 public:
  explicit AntiHermitianMoment(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw std::invalid_argument("moment matrix must be square");
    }
    if (max_abs(m_ + m_.adjoint()) > tol::kHermitian) {
      throw std::invalid_argument("antihermiticity violated");
    }
  }

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  CMatrix m_;
};

// F(psi) = -i z z^dagger.  Quadratic in psi and equivariant: conjugating psi
// by a unitary U conjugates the value by U as well.
inline AntiHermitianMoment momentum_map(const RealifiedVector& psi) {
  const CVector z = to_complex(psi);
  return AntiHermitianMoment(-kImag * (z * z.adjoint()));
}

// Normalized rank-one projector onto the ray through psi.
inline DensityState pure_projector(const RealifiedVector& psi) {
  const double nrm2 = psi.squared_norm();
  if (nrm2 == 0.0) {
    throw std::domain_error("projector undefined at the zero vector");
  }
  const CVector z = to_complex(psi);
  return DensityState((z * z.adjoint()) / nrm2);
}

// theta(v) = <z, w>/<z, z> at psi.  The numerator and denominator are
// accumulated component by component from the same products, which makes
// theta(psi) == 1 and theta(J psi) == i hold without rounding error.
inline Complex connection_form(const RealifiedVector& psi,
                               const RealifiedVector& v) {
  const auto n = psi.dim();
  if (v.dim() != n) throw std::invalid_argument("dimension mismatch");
  double den = 0.0;
  double num_re = 0.0;
  double num_im = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double qz = psi.coords()[i];
    const double pz = psi.coords()[n + i];
    const double qw = v.coords()[i];
    const double pw = v.coords()[n + i];
    den += qz * qz + pz * pz;
    num_re += qz * qw + pz * pw;
    num_im += qz * pw - pz * qw;
  }
  if (den == 0.0) {
    throw std::domain_error("connection undefined at the zero vector");
  }
  return {num_re / den, num_im / den};
}

// Component of v transverse to the fibre directions psi, J psi.
inline RealifiedVector horizontal_projection(const RealifiedVector& psi,
                                             const RealifiedVector& v) {
  const Complex theta = connection_form(psi, v);
  const CVector z = to_complex(psi);
  return to_real(CVector(to_complex(v) - theta * z));
}

// Fubini-Study tensor at psi on tangent vectors v, w:
//
//   fs = <v, w>/<z, z> - <v, z><z, w>/<z, z>^2,
//
// the Hermitian product of the horizontal parts of v and w scaled by the
// squared norm.  Real part: the Fubini-Study metric; imaginary part: the
// Fubini-Study symplectic form.  Degenerate exactly on span{psi, J psi}.
inline Complex fubini_study(const RealifiedVector& psi,
                            const RealifiedVector& v,
                            const RealifiedVector& w) {
  const auto n = psi.dim();
  if (v.dim() != n || w.dim() != n) {
    throw std::invalid_argument("dimension mismatch");
  }
  const double nrm2 = psi.squared_norm();
  if (nrm2 == 0.0) {
    throw std::domain_error("tensor undefined at the zero vector");
  }
  const CVector z = to_complex(psi);
  const CVector zv = to_complex(v);
  const CVector zw = to_complex(w);
  return zv.dot(zw) / nrm2 - zv.dot(z) * z.dot(zw) / (nrm2 * nrm2);
}

struct BlochVector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  Eigen::Vector3d vec() const { return {x1, x2, x3}; }
  double norm() const { return vec().norm(); }

  static BlochVector from(const Eigen::Vector3d& v) {
    return {v[0], v[1], v[2]};
  }
};

// Chart of the ray space of a two-level system on the unit sphere:
// x_j = <z, sigma_j z>/<z, z>.
inline BlochVector bloch_map(const RealifiedVector& psi) {
  if (psi.dim() != 2) {
    throw std::invalid_argument("Bloch map requires a two-level state");
  }
  const double nrm2 = psi.squared_norm();
  if (nrm2 == 0.0) {
    throw std::domain_error("Bloch map undefined at the zero vector");
  }
  const CVector z = to_complex(psi);
  BlochVector b;
  b.x1 = (z.dot(pauli(1) * z)).real() / nrm2;
  b.x2 = (z.dot(pauli(2) * z)).real() / nrm2;
  b.x3 = (z.dot(pauli(3) * z)).real() / nrm2;
  return b;
}

}  // namespace qgeom

#endif  // QGEOM_PROJECTIVE_HPP_
