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
// Two-qubit composites: tensor products, separable states, the Pauli-basis
// and Cartan-diagonal decompositions, and the Poisson product rule on
// coordinate monomials.  Subsystem A is always the left Kronecker factor.

#ifndef QGEOM_COMPOSITE_HPP_
#define QGEOM_COMPOSITE_HPP_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qgeom/density_state.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

// Component order (z1 w1, z1 w2, z2 w1, z2 w2); the norm is multiplicative.
inline CVector tensor_state(const CVector& z, const CVector& w) {
  return kron(z, w);
}

struct PauliDecomposition {
  Eigen::Vector3d p;  // coefficients on sigma_j (x) 1
  Eigen::Vector3d q;  // coefficients on 1 (x) sigma_k
  Eigen::Matrix3d r;  // coefficients on sigma_j (x) sigma_k
};

// rho_A(n) (x) rho_B(m) for unit Bloch vectors n, m.  Rank one, and its
// Pauli decomposition is (n, m, n m^T).
inline DensityState separable_pure(const Eigen::Vector3d& n,
                                   const Eigen::Vector3d& m) {
  if (std::abs(n.norm() - 1.0) > 1e-10 || std::abs(m.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("separable factors must be unit vectors");
  }
  const CMatrix rho_a =
      0.5 * (pauli(0) + n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3));
  const CMatrix rho_b =
      0.5 * (pauli(0) + m[0] * pauli(1) + m[1] * pauli(2) + m[2] * pauli(3));
  return make_density(kron(rho_a, rho_b));
}

// p_j = Tr(rho sigma_j (x) 1), q_k = Tr(rho 1 (x) sigma_k),
// r_jk = Tr(rho sigma_j (x) sigma_k).
inline PauliDecomposition pauli_decompose(const DensityState& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("Pauli decomposition requires two qubits");
  }
  PauliDecomposition d;
  for (int j = 0; j < 3; ++j) {
    d.p[j] = (rho.matrix() * kron(pauli(j + 1), pauli(0))).trace().real();
    d.q[j] = (rho.matrix() * kron(pauli(0), pauli(j + 1))).trace().real();
    for (int k = 0; k < 3; ++k) {
      d.r(j, k) =
          (rho.matrix() * kron(pauli(j + 1), pauli(k + 1))).trace().real();
    }
  }
  return d;
}

// (1/4)(1 + sum p_j sigma_j (x) 1 + sum q_k 1 (x) sigma_k
//        + sum r_jk sigma_j (x) sigma_k).
// Hermitian with unit trace for any coefficients; positivity is NOT implied
// by any norm bound on (p, q, r), so the result is a raw matrix.
inline CMatrix pauli_reconstruct(const PauliDecomposition& d) {
  CMatrix m = kron(pauli(0), pauli(0));
  for (int j = 0; j < 3; ++j) {
    m += d.p[j] * kron(pauli(j + 1), pauli(0));
    m += d.q[j] * kron(pauli(0), pauli(j + 1));
    for (int k = 0; k < 3; ++k) {
      m += d.r(j, k) * kron(pauli(j + 1), pauli(k + 1));
    }
  }
  return 0.25 * m;
}

struct CartanForm {
  CMatrix u;          // 4x4 unitary
  Eigen::Vector3d p;  // coefficients on lambda_1, lambda_2, lambda_3
};

// Basis of the diagonal (Cartan) subalgebra used by cartan_canonical_form:
// lambda_0 = 1(x)1, lambda_1 = sigma_3(x)1, lambda_2 = 1(x)sigma_3,
// lambda_3 = sigma_3(x)sigma_3.
inline CMatrix cartan_lambda(int k) {
  switch (k) {
    case 0:
      return kron(pauli(0), pauli(0));
    case 1:
      return kron(pauli(3), pauli(0));
    case 2:
      return kron(pauli(0), pauli(3));
    case 3:
      return kron(pauli(3), pauli(3));
    default:
      throw std::invalid_argument("lambda index out of range");
  }
}

namespace detail {

// Orders (eigenvalue, eigenvector) pairs by descending eigenvalue; ties are
// broken lexicographically on the phase-fixed eigenvector components so the
// assembled unitary is deterministic.
inline bool cartan_column_less(double da, const CVector& va, double db,
                               const CVector& vb) {
  if (da != db) return da > db;
  for (Eigen::Index i = 0; i < va.size(); ++i) {
    if (va[i].real() != vb[i].real()) return va[i].real() < vb[i].real();
    if (va[i].imag() != vb[i].imag()) return va[i].imag() < vb[i].imag();
  }
  return false;
}

inline CVector fix_phase(CVector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      break;
    }
  }
  return v;
}

}  // namespace detail

// Diagonalizes rho as U . (lambda_0 + p . lambda)/4 . U^dagger with the
// eigenvalues in descending order.  The diagonal coefficients come from
// inverting the Hadamard-type system 4 d_i = (lambda_0 + p . lambda)_ii.
inline CartanForm cartan_canonical_form(const DensityState& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("Cartan form requires two qubits");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  std::vector<int> order{0, 1, 2, 3};
  std::vector<CVector> cols(4);
  for (int i = 0; i < 4; ++i) {
    cols[i] = detail::fix_phase(es.eigenvectors().col(i));
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return detail::cartan_column_less(es.eigenvalues()[a], cols[a],
                                      es.eigenvalues()[b], cols[b]);
  });

  CartanForm out;
  out.u = CMatrix(4, 4);
  Eigen::Vector4d d;
  for (int i = 0; i < 4; ++i) {
    out.u.col(i) = cols[order[i]];
    d[i] = es.eigenvalues()[order[i]];
  }
  out.p[0] = d[0] + d[1] - d[2] - d[3];
  out.p[1] = d[0] - d[1] + d[2] - d[3];
  out.p[2] = d[0] - d[1] - d[2] + d[3];
  return out;
}

// A coordinate monomial factor: coordinate `index` (1-based) of one
// subsystem, optionally conjugated.
struct CoordRef {
  int index = 1;
  bool conjugated = false;
};

namespace detail {

inline void check_coord(const CoordRef& c, const CVector& v) {
  if (c.index < 1 || c.index > v.size()) {
    throw std::invalid_argument("index out of range");
  }
}

inline Complex coord_value(const CoordRef& c, const CVector& v) {
  const Complex z = v[c.index - 1];
  return c.conjugated ? std::conj(z) : z;
}

// Partials of the factor with respect to the real coordinates (q_a, p_a)
// of its own subsystem: d z_b/d q_a = delta, d z_b/d p_a = +/- i delta.
inline Complex coord_dq(const CoordRef& c, int a) {
  return c.index - 1 == a ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
}

inline Complex coord_dp(const CoordRef& c, int a) {
  if (c.index - 1 != a) return {0.0, 0.0};
  return c.conjugated ? -kImag : kImag;
}

// {mu, nu} within one subsystem, from {q_a, p_b} = delta_ab.
inline Complex factor_bracket(const CoordRef& mu, const CoordRef& nu,
                              const CVector& v) {
  Complex out{0.0, 0.0};
  for (int a = 0; a < v.size(); ++a) {
    out += coord_dq(mu, a) * coord_dp(nu, a) - coord_dp(mu, a) * coord_dq(nu, a);
  }
  return out;
}

}  // namespace detail

// {z_m w_n, z_r w_s} evaluated through the full Poisson tensor of the
// realified direct sum: both subsystems contribute canonical pairs, and the
// product rule over each subsystem's coordinates is applied literally.
inline Complex product_poisson(const CoordRef& m, const CoordRef& n,
                               const CoordRef& r, const CoordRef& s,
                               const CVector& z, const CVector& w) {
  detail::check_coord(m, z);
  detail::check_coord(n, w);
  detail::check_coord(r, z);
  detail::check_coord(s, w);
  const Complex zm = detail::coord_value(m, z);
  const Complex wn = detail::coord_value(n, w);
  const Complex zr = detail::coord_value(r, z);
  const Complex ws = detail::coord_value(s, w);

  Complex out{0.0, 0.0};
  for (int a = 0; a < z.size(); ++a) {
    const Complex f_q = detail::coord_dq(m, a) * wn;
    const Complex f_p = detail::coord_dp(m, a) * wn;
    const Complex g_q = detail::coord_dq(r, a) * ws;
    const Complex g_p = detail::coord_dp(r, a) * ws;
    out += f_q * g_p - f_p * g_q;
  }
  for (int a = 0; a < w.size(); ++a) {
    const Complex f_q = zm * detail::coord_dq(n, a);
    const Complex f_p = zm * detail::coord_dp(n, a);
    const Complex g_q = zr * detail::coord_dq(s, a);
    const Complex g_p = zr * detail::coord_dp(s, a);
    out += f_q * g_p - f_p * g_q;
  }
  return out;
}

// The factorized side of the product rule:
// {z_m, z_r} w_n w_s + z_m z_r {w_n, w_s}, with the factor brackets
// {z_a, z_b} = 0 and {z_a, z_b*} = -2i delta_ab.
inline Complex product_poisson_factor_rule(const CoordRef& m,
                                           const CoordRef& n,
                                           const CoordRef& r,
                                           const CoordRef& s, const CVector& z,
                                           const CVector& w) {
  detail::check_coord(m, z);
  detail::check_coord(n, w);
  detail::check_coord(r, z);
  detail::check_coord(s, w);
  return detail::factor_bracket(m, r, z) * detail::coord_value(n, w) *
             detail::coord_value(s, w) +
         detail::coord_value(m, z) * detail::coord_value(r, z) *
             detail::factor_bracket(n, s, w);
}

}  // namespace qgeom

#endif  // QGEOM_COMPOSITE_HPP_
