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

#include <catch2/catch_amalgamated.hpp>

#include <qgeom/qgeom.hpp>

using namespace qgeom;
using Catch::Matchers::WithinAbs;

namespace {

CVector basis2(int k) {
  CVector v = CVector::Zero(2);
  v[k] = 1.0;
  return v;
}

DensityState bell_state() {
  CVector phi = CVector::Zero(4);
  phi[0] = 1.0 / std::sqrt(2.0);
  phi[3] = 1.0 / std::sqrt(2.0);
  return pure_projector(to_real(phi));
}

}  // namespace

TEST_CASE("tensor product orders slots as z_i w_j") {
  const CVector prod = tensor_state(basis2(0), basis2(1));
  REQUIRE(prod.size() == 4);
  REQUIRE(prod[0] == Complex{0.0, 0.0});
  REQUIRE(prod[1] == Complex{1.0, 0.0});
  REQUIRE(prod[2] == Complex{0.0, 0.0});
  REQUIRE(prod[3] == Complex{0.0, 0.0});

  CVector z(2), w(2);
  z << Complex{1.0, 1.0}, Complex{2.0, 0.0};
  w << Complex{0.0, 1.0}, Complex{3.0, -1.0};
  const CVector zw = tensor_state(z, w);
  REQUIRE(zw[1] == z[0] * w[1]);
  REQUIRE(zw[2] == z[1] * w[0]);
  REQUIRE_THAT(zw.norm() - z.norm() * w.norm(), WithinAbs(0.0, 1e-14));
}

TEST_CASE("separable pure states factor their Pauli decomposition") {
  const Eigen::Vector3d north{0.0, 0.0, 1.0};
  const DensityState up_up = separable_pure(north, north);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  REQUIRE_THAT(max_abs(up_up.matrix() - expected), WithinAbs(0.0, 1e-15));

  Rng rng(5u);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Vector3d n = random_unit_bloch(rng);
    const Eigen::Vector3d m = random_unit_bloch(rng);
    const DensityState rho = separable_pure(n, m);
    REQUIRE_THAT(rho.purity(), WithinAbs(1.0, 1e-12));
    const PauliDecomposition d = pauli_decompose(rho);
    REQUIRE_THAT((d.p - n).norm(), WithinAbs(0.0, 1e-10));
    REQUIRE_THAT((d.q - m).norm(), WithinAbs(0.0, 1e-10));
    REQUIRE_THAT((d.r - n * m.transpose()).norm(), WithinAbs(0.0, 1e-10));
  }

  REQUIRE_THROWS_WITH(separable_pure({0.0, 0.0, 2.0}, north),
                      "separable factors must be unit vectors");
}

TEST_CASE("bell state has a diagonal correlation matrix") {
  const PauliDecomposition d = pauli_decompose(bell_state());
  REQUIRE_THAT(d.p.norm(), WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(d.q.norm(), WithinAbs(0.0, 1e-12));
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected.diagonal() << 1.0, -1.0, 1.0;
  REQUIRE_THAT((d.r - expected).norm(), WithinAbs(0.0, 1e-12));
}

TEST_CASE("pauli decomposition round trips and measures purity") {
  Rng rng(11u);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityState rho = random_density(rng, 4);
    const PauliDecomposition d = pauli_decompose(rho);
    REQUIRE_THAT(max_abs(pauli_reconstruct(d) - rho.matrix()),
                 WithinAbs(0.0, 1e-12));
    const double via_coeffs = (1.0 + d.p.squaredNorm() + d.q.squaredNorm() +
                               d.r.squaredNorm()) /
                              4.0;
    REQUIRE_THAT(rho.purity() - via_coeffs, WithinAbs(0.0, 1e-12));
    REQUIRE(via_coeffs <= 1.0 + 1e-12);
  }
}

TEST_CASE("diagonal subalgebra basis multiplies consistently") {
  REQUIRE(max_abs(cartan_lambda(1) * cartan_lambda(2) - cartan_lambda(3)) ==
          0.0);
  REQUIRE(max_abs(cartan_lambda(0) - CMatrix(CMatrix::Identity(4, 4))) == 0.0);
  REQUIRE_THROWS_AS(cartan_lambda(4), std::invalid_argument);
}

TEST_CASE("cartan form of a rank-one diagonal state") {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  const CartanForm form = cartan_canonical_form(make_density(m));
  REQUIRE_THAT((form.p - Eigen::Vector3d{1.0, 1.0, 1.0}).norm(),
               WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(max_abs(form.u * form.u.adjoint() -
                       CMatrix(CMatrix::Identity(4, 4))),
               WithinAbs(0.0, 1e-12));
}

TEST_CASE("cartan form reconstructs the state from descending coefficients") {
  Rng rng(17u);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityState rho = random_density(rng, 4);
    const CartanForm form = cartan_canonical_form(rho);

    CMatrix diag = cartan_lambda(0);
    for (int k = 1; k <= 3; ++k) diag += form.p[k - 1] * cartan_lambda(k);
    diag /= 4.0;
    REQUIRE_THAT(max_abs(form.u * diag * form.u.adjoint() - rho.matrix()),
                 WithinAbs(0.0, 1e-10));

    // The diagonal entries of diag are the eigenvalues in descending order.
    for (int i = 0; i + 1 < 4; ++i) {
      REQUIRE(diag(i, i).real() >= diag(i + 1, i + 1).real() - 1e-12);
    }
    REQUIRE_THAT(max_abs(form.u.adjoint() * form.u -
                         CMatrix(CMatrix::Identity(4, 4))),
                 WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("product coordinates bracket through both routes") {
  CVector z(2), w(2);
  z << Complex{2.0, 1.0}, Complex{-0.5, 0.3};
  w << Complex{1.5, -0.7}, Complex{0.2, 0.9};

  const CoordRef z1{1, false};
  const CoordRef z1c{1, true};
  const CoordRef w1{1, false};

  // {z_1 w_1, z_1* w_1} = -2i w_1^2.
  const Complex direct = product_poisson(z1, w1, z1c, w1, z, w);
  const Complex factored = product_poisson_factor_rule(z1, w1, z1c, w1, z, w);
  const Complex oracle = Complex{0.0, -2.0} * w[0] * w[0];
  REQUIRE_THAT(std::abs(direct - oracle), WithinAbs(0.0, 1e-14));
  REQUIRE_THAT(std::abs(factored - oracle), WithinAbs(0.0, 1e-14));

  // Unconjugated monomials in distinct slots commute.
  const CoordRef z2{2, false};
  const CoordRef w2{2, false};
  REQUIRE_THAT(std::abs(product_poisson(z1, w1, z2, w2, z, w)),
               WithinAbs(0.0, 1e-14));
  REQUIRE_THAT(std::abs(product_poisson_factor_rule(z1, w1, z2, w2, z, w)),
               WithinAbs(0.0, 1e-14));
}

TEST_CASE("product rule holds on random monomial pairs") {
  Rng rng(23u);
  for (int trial = 0; trial < 50; ++trial) {
    const CVector z = random_complex_vector(rng, 2);
    const CVector w = random_complex_vector(rng, 2);
    const CoordRef m{1 + static_cast<int>(rng.bits() % 2), rng.bits() % 2 == 0};
    const CoordRef n{1 + static_cast<int>(rng.bits() % 2), rng.bits() % 2 == 0};
    const CoordRef r{1 + static_cast<int>(rng.bits() % 2), rng.bits() % 2 == 0};
    const CoordRef s{1 + static_cast<int>(rng.bits() % 2), rng.bits() % 2 == 0};
    const Complex lhs = product_poisson(m, n, r, s, z, w);
    const Complex rhs = product_poisson_factor_rule(m, n, r, s, z, w);
    REQUIRE_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("coordinate references validate their index") {
  CVector z(2), w(2);
  z.setOnes();
  w.setOnes();
  REQUIRE_THROWS_WITH(
      product_poisson({3, false}, {1, false}, {1, false}, {1, false}, z, w),
      "index out of range");
  REQUIRE_THROWS_WITH(
      product_poisson({0, false}, {1, false}, {1, false}, {1, false}, z, w),
      "index out of range");
}
