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
// Seeded generators for randomized property checks.  Every trial derives
// its own seed from (base seed, trial index), so trial sets reproduce
// independently of execution order.

#ifndef QGEOM_RANDOM_HPP_
#define QGEOM_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "qgeom/density.hpp"
#include "qgeom/density_state.hpp"
#include "qgeom/realified.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

// splitmix64 finalizer on (seed, k); the +1 keeps k = 0 from echoing the
// base seed's mix.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t x = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }  // [0, 1)
  std::uint64_t bits() { return engine_(); }

  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

inline CVector random_complex_vector(Rng& rng, Eigen::Index n) {
  CVector z(n);
  for (Eigen::Index i = 0; i < n; ++i) z[i] = rng.complex_normal();
  return z;
}

// Nonzero Gaussian vector; retry guards the measure-zero degenerate draw.
inline CVector random_nonzero_vector(Rng& rng, Eigen::Index n) {
  CVector z = random_complex_vector(rng, n);
  while (z.norm() < 1e-6) z = random_complex_vector(rng, n);
  return z;
}

inline CVector random_unit_vector(Rng& rng, Eigen::Index n) {
  const CVector z = random_nonzero_vector(rng, n);
  return z / z.norm();
}

inline RealifiedVector random_state(Rng& rng, Eigen::Index n) {
  return to_real(random_nonzero_vector(rng, n));
}

inline CMatrix random_complex_matrix(Rng& rng, Eigen::Index n) {
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
  }
  return m;
}

inline HermitianOperator random_hermitian(Rng& rng, Eigen::Index n) {
  const CMatrix g = random_complex_matrix(rng, n);
  return HermitianOperator(0.5 * (g + g.adjoint()));
}

// Hermitian with spectral norm at most 1.
inline HermitianOperator random_hermitian_bounded(Rng& rng, Eigen::Index n) {
  const CMatrix g = random_complex_matrix(rng, n);
  CMatrix h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();
  if (top > 1.0) h /= top;
  return HermitianOperator(std::move(h));
}

// Haar-distributed unitary: QR of a Gaussian matrix with the R diagonal
// phases absorbed into Q.
inline CMatrix random_unitary(Rng& rng, Eigen::Index n) {
  const CMatrix g = random_complex_matrix(rng, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CVector d = qr.matrixQR().diagonal();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = std::abs(d[i]);
    if (a > 0.0) q.col(i) *= d[i] / a;
  }
  return q;
}

// Full-rank Wishart draw normalized to unit trace.
inline DensityState random_density(Rng& rng, Eigen::Index n) {
  const CMatrix g = random_complex_matrix(rng, n);
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return make_density(std::move(m));
}

inline Eigen::Vector3d random_unit_bloch(Rng& rng) {
  Eigen::Vector3d v{rng.normal(), rng.normal(), rng.normal()};
  while (v.norm() < 1e-6) v = {rng.normal(), rng.normal(), rng.normal()};
  return v / v.norm();
}

// Random convex decomposition of rho into `terms` unit states: mixes the
// spectral decomposition sqrt(lambda_i) v_i through the first columns of a
// Haar unitary.  Every such mixture reproduces rho exactly; terms below a
// negligible weight are dropped.
inline MixtureDecomposition random_decomposition(Rng& rng,
                                                 const DensityState& rho,
                                                 int terms) {
  const auto n = rho.dim();
  if (terms < n) terms = static_cast<int>(n);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const CMatrix v = random_unitary(rng, terms);

  MixtureDecomposition d;
  for (int j = 0; j < terms; ++j) {
    CVector u = CVector::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double lam = es.eigenvalues()[i];
      if (lam <= 0.0) continue;
      u += std::conj(v(j, i)) * std::sqrt(lam) * es.eigenvectors().col(i);
    }
    const double weight = u.squaredNorm();
    if (weight < 1e-14) continue;
    d.weights.push_back(weight);
    d.states.push_back(to_real(CVector(u / u.norm())));
  }
  return d;
}

}  // namespace qgeom

#endif  // QGEOM_RANDOM_HPP_
