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
// Real picture of a finite complex inner-product space.
//
// A complex vector z in C^n is stored as 2n real coordinates (q, p) with
// z_a = q_a + i p_a.  Multiplication by i becomes the linear map
// J(q, p) = (-p, q), and the Hermitian product splits into a Euclidean
// metric g and a symplectic form omega:
//
//   <x, y> = g(x, y) + i omega(x, y),   antilinear in the first slot.
//
// In these coordinates g is the identity, omega(x, y) = q_x.p_y - p_x.q_y,
// and the compatibility identity reads g(x, y) = omega(x, Jy).

#ifndef QGEOM_REALIFIED_HPP_
#define QGEOM_REALIFIED_HPP_

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "qgeom/types.hpp"

namespace qgeom {

// Element of R^{2n} carrying the realified coordinates (q_1..q_n, p_1..p_n).
class RealifiedVector {
 public:
  RealifiedVector() = default;

  explicit RealifiedVector(RVector coords) : coords_(std::move(coords)) {
    if (coords_.size() % 2 != 0) {
      throw std::invalid_argument(
          "realified coordinate vector must have even length");
    }
  }

  Eigen::Index dim() const { return coords_.size() / 2; }
  const RVector& coords() const { return coords_; }

  auto q() const { return coords_.head(dim()); }
  auto p() const { return coords_.tail(dim()); }

  double norm() const { return coords_.norm(); }
  double squared_norm() const { return coords_.squaredNorm(); }

 private:
  RVector coords_;
};

inline RealifiedVector operator+(const RealifiedVector& a,
                                 const RealifiedVector& b) {
  return RealifiedVector(a.coords() + b.coords());
}

inline RealifiedVector operator-(const RealifiedVector& a,
                                 const RealifiedVector& b) {
  return RealifiedVector(a.coords() - b.coords());
}

inline RealifiedVector operator*(double s, const RealifiedVector& a) {
  return RealifiedVector(s * a.coords());
}

inline RealifiedVector to_real(const CVector& z) {
  RVector c(2 * z.size());
  c.head(z.size()) = z.real();
  c.tail(z.size()) = z.imag();
  return RealifiedVector(std::move(c));
}

inline CVector to_complex(const RealifiedVector& x) {
  const auto n = x.dim();
  CVector z(n);
  z.real() = x.q();
  z.imag() = x.p();
  return z;
}

// J x, the realified form of x -> i x.
inline RealifiedVector apply_complex_structure(const RealifiedVector& x) {
  const auto n = x.dim();
  RVector c(2 * n);
  c.head(n) = -x.p();
  c.tail(n) = x.q();
  return RealifiedVector(std::move(c));
}

// The constant tensors (g, omega, J) of the realified space, together with
// their inverse/contravariant companions Lambda (Poisson) and G (Jordan).
// Applications are implemented index-free; the *_matrix accessors exist so
// tests can check the coordinate expressions literally.
class TensorTriple {
 public:
  explicit TensorTriple(Eigen::Index n) : n_(n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
  }

  Eigen::Index dim() const { return n_; }

  double metric(const RealifiedVector& x, const RealifiedVector& y) const {
    check(x, y);
    return x.coords().dot(y.coords());
  }

  double symplectic(const RealifiedVector& x, const RealifiedVector& y) const {
    check(x, y);
    return x.q().dot(y.p()) - x.p().dot(y.q());
  }

  RealifiedVector complex_structure(const RealifiedVector& x) const {
    check(x, x);
    return apply_complex_structure(x);
  }

  // Poisson pairing of two covectors: a^T Lambda b.
  double poisson(const RVector& a, const RVector& b) const {
    check_cov(a);
    check_cov(b);
    return a.head(n_).dot(b.tail(n_)) - a.tail(n_).dot(b.head(n_));
  }

  // Jordan pairing of two covectors: a^T G b.
  double jordan(const RVector& a, const RVector& b) const {
    check_cov(a);
    check_cov(b);
    return a.dot(b);
  }

  // Raises a differential to its Hamiltonian vector field, Lambda df.
  RealifiedVector hamiltonian_field(const RVector& df) const {
    check_cov(df);
    RVector c(2 * n_);
    c.head(n_) = df.tail(n_);
    c.tail(n_) = -df.head(n_);
    return RealifiedVector(std::move(c));
  }

  RMatrix metric_matrix() const { return RMatrix::Identity(2 * n_, 2 * n_); }

  RMatrix symplectic_matrix() const {
    RMatrix w = RMatrix::Zero(2 * n_, 2 * n_);
    w.topRightCorner(n_, n_) = RMatrix::Identity(n_, n_);
    w.bottomLeftCorner(n_, n_) = -RMatrix::Identity(n_, n_);
    return w;
  }

  RMatrix complex_structure_matrix() const {
    return -symplectic_matrix();
  }

  RMatrix poisson_matrix() const { return symplectic_matrix(); }

  RMatrix jordan_matrix() const { return metric_matrix(); }

 private:
  void check(const RealifiedVector& x, const RealifiedVector& y) const {
    if (x.dim() != n_ || y.dim() != n_) {
      throw std::invalid_argument("dimension mismatch");
    }
  }
  void check_cov(const RVector& a) const {
    if (a.size() != 2 * n_) throw std::invalid_argument("dimension mismatch");
  }

  Eigen::Index n_;
};

struct HermitianParts {
  double g;
  double omega;
  Complex h;  // g + i omega
};

// Splits the Hermitian product of two realified vectors into metric and
// symplectic parts.  Both parts are accumulated in real arithmetic, so
// h == Complex(g, omega) holds exactly.
inline HermitianParts hermitian_parts(const RealifiedVector& x,
                                      const RealifiedVector& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  if (x.dim() == 0) return {0.0, 0.0, Complex{0.0, 0.0}};
  TensorTriple t(x.dim());
  const double g = t.metric(x, y);
  const double omega = t.symplectic(x, y);
  return {g, omega, Complex{g, omega}};
}

struct CanonicalFields {
  RealifiedVector dilation;  // Delta = x
  RealifiedVector phase;     // J Delta = Jx
};

// Values at x of the dilation field and its J-rotation; together they span
// the fibre directions of the projection onto rays.
inline CanonicalFields canonical_fields(const RealifiedVector& x) {
  return {x, apply_complex_structure(x)};
}

// Logarithmic derivative d log f / d log s of f along the dilation through x,
// estimated by a central difference.  For f homogeneous of degree k this
// returns k up to O(step^2).
inline double homogeneity_degree(
    const std::function<double(const RealifiedVector&)>& f,
    const RealifiedVector& x, double step = 1e-5) {
  if (x.norm() == 0.0) {
    throw std::domain_error("homogeneity degree undefined at the origin");
  }
  const double up = f((1.0 + step) * x);
  const double down = f((1.0 - step) * x);
  const double mid = f(x);
  if (mid == 0.0) {
    throw std::domain_error("homogeneity degree undefined at a zero of f");
  }
  return (up - down) / (2.0 * step * mid);
}

}  // namespace qgeom

#endif  // QGEOM_REALIFIED_HPP_
