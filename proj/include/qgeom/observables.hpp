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
// Operators as quadratic functions on the realified space.
//
// A matrix A acting on C^n becomes a real-linear map T_A on R^{2n}, and the
// function f_A(x) = <z, A z>/2 carries the operator algebra: Poisson brackets
// of such functions reproduce (-i times) commutators, Jordan brackets
// reproduce anticommutators.

#ifndef QGEOM_OBSERVABLES_HPP_
#define QGEOM_OBSERVABLES_HPP_

#include <stdexcept>
#include <utility>

#include "qgeom/realified.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw std::invalid_argument("operator matrix must be square");
    }
    if (max_abs(m_ - m_.adjoint()) > tol::kHermitian) {
      throw std::invalid_argument("hermiticity violated");
    }
  }

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  CMatrix m_;
};

// Real 2n x 2n block matrix of multiplication by A, so that
// tensorize(A) * x == to_real(A * to_complex(x)).  Commutes with J for
// every A because A is complex-linear.
inline RMatrix tensorize(const CMatrix& a) {
  const auto n = a.rows();
  if (a.cols() != n) {
    throw std::invalid_argument("operator matrix must be square");
  }
  RMatrix t(2 * n, 2 * n);
  t.topLeftCorner(n, n) = a.real();
  t.topRightCorner(n, n) = -a.imag();
  t.bottomLeftCorner(n, n) = a.imag();
  t.bottomRightCorner(n, n) = a.real();
  return t;
}

struct OperatorFields {
  RealifiedVector gradient;  // grad f_A (x) = T_A x
  RealifiedVector rotated;   // Y_A (x) = T_A (J x)
};

inline RealifiedVector apply_tensorized(const CMatrix& a,
                                        const RealifiedVector& x) {
  if (a.rows() != a.cols() || a.rows() != x.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const auto n = x.dim();
  RVector c(2 * n);
  c.head(n) = a.real() * x.q() - a.imag() * x.p();
  c.tail(n) = a.imag() * x.q() + a.real() * x.p();
  return RealifiedVector(std::move(c));
}

// Gradient and J-rotated fields of f_A.  The Hamiltonian field of f_A is
// the Lambda-raise of the gradient, equal to -rotated.
inline OperatorFields operator_fields(const HermitianOperator& a,
                                      const RealifiedVector& x) {
  return {apply_tensorized(a.matrix(), x),
          apply_tensorized(a.matrix(), apply_complex_structure(x))};
}

// <z, A z>/2 assembled from the realified data alone: the metric part gives
// the real component, the symplectic part the imaginary one.  Accepts any
// square A, not just Hermitian ones.
inline Complex quadratic_form(const CMatrix& a, const RealifiedVector& x) {
  return hermitian_parts(x, apply_tensorized(a, x)).h / 2.0;
}

// Normalized expectation <z, A z>/<z, z> of a Hermitian operator.
inline double expectation(const HermitianOperator& a,
                          const RealifiedVector& x) {
  const double nrm2 = x.squared_norm();
  if (nrm2 == 0.0) {
    throw std::domain_error("expectation undefined at the zero vector");
  }
  TensorTriple t(x.dim());
  return t.metric(x, apply_tensorized(a.matrix(), x)) / nrm2;
}

struct BracketPair {
  double poisson;
  double jordan;
};

// Both pairings of two covectors at a point, df^T Lambda dg and df^T G dg.
// The tensors are constant, so the base point enters only through its
// dimension.
inline BracketPair bracket_general(const RVector& df, const RVector& dg,
                                   const RealifiedVector& x) {
  if (x.dim() == 0 || df.size() != 2 * x.dim() || dg.size() != 2 * x.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  TensorTriple t(x.dim());
  return {t.poisson(df, dg), t.jordan(df, dg)};
}

inline double poisson_bracket(const HermitianOperator& a,
                              const HermitianOperator& b,
                              const RealifiedVector& x) {
  const RVector da = apply_tensorized(a.matrix(), x).coords();
  const RVector db = apply_tensorized(b.matrix(), x).coords();
  return bracket_general(da, db, x).poisson;
}

inline double jordan_bracket(const HermitianOperator& a,
                             const HermitianOperator& b,
                             const RealifiedVector& x) {
  const RVector da = apply_tensorized(a.matrix(), x).coords();
  const RVector db = apply_tensorized(b.matrix(), x).coords();
  return bracket_general(da, db, x).jordan;
}

}  // namespace qgeom

#endif  // QGEOM_OBSERVABLES_HPP_
