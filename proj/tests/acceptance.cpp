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

// Release gate: twelve numbered checks, one line of output each.  The
// first command-line argument must be the path to the qgeom CLI binary,
// which the final check drives end to end.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <qgeom/qgeom.hpp>

namespace {

using namespace qgeom;
using Clock = std::chrono::steady_clock;

double g_worst = 0.0;

void reset_worst() { g_worst = 0.0; }

void bound(double dev) {
  if (std::isnan(dev) || dev > g_worst) g_worst = dev;
}

bool finish(int id, const char* name, double tol, bool extra_ok = true,
            double seconds = -1.0, double budget = -1.0) {
  const bool within_tol = g_worst <= tol;
  const bool within_time = budget < 0.0 || seconds < budget;
  const bool ok = within_tol && extra_ok && within_time;
  std::printf("%s %2d %-28s worst %.3e tol %.0e", ok ? "PASS" : "FAIL", id,
              name, g_worst, tol);
  if (budget >= 0.0) std::printf(" time %.2fs/%.0fs", seconds, budget);
  if (!extra_ok) std::printf(" [exactness or rank check failed]");
  std::printf("\n");
  return ok;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1: quadratic-function brackets reduce to operator products.
bool criterion_brackets() {
  reset_worst();
  const auto start = Clock::now();
  for (int n = 2; n <= 4; ++n) {
    Rng rng(100u + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 200; ++trial) {
      const HermitianOperator a = random_hermitian(rng, n);
      const HermitianOperator b = random_hermitian(rng, n);
      const RealifiedVector x = random_state(rng, n);
      const CMatrix comm = -kImag * commutator(a.matrix(), b.matrix());
      bound(std::abs(poisson_bracket(a, b, x) -
                     quadratic_form(comm, x).real()));
      const CMatrix anti = anticommutator(a.matrix(), b.matrix());
      bound(std::abs(jordan_bracket(a, b, x) -
                     quadratic_form(anti, x).real()));
    }
  }
  return finish(1, "bracket-theorems", 1e-10, true, seconds_since(start),
                5.0);
}

// 2: flat metric, symplectic form, and complex structure fit together.
bool criterion_tensor_triple() {
  reset_worst();
  bool algebra_ok = true;
  for (int n = 1; n <= 4; ++n) {
    const TensorTriple t(n);
    const RMatrix id = RMatrix::Identity(2 * n, 2 * n);
    algebra_ok = algebra_ok &&
                 (t.complex_structure_matrix() * t.complex_structure_matrix() +
                  id).cwiseAbs().maxCoeff() <= 1e-12 &&
                 (t.jordan_matrix() -
                  t.complex_structure_matrix() * t.poisson_matrix())
                         .cwiseAbs()
                         .maxCoeff() <= 1e-12;
    Rng rng(200u + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 100; ++trial) {
      const RealifiedVector x = random_state(rng, n);
      const RealifiedVector y = random_state(rng, n);
      const RealifiedVector jx = t.complex_structure(x);
      const RealifiedVector jy = t.complex_structure(y);
      bound(std::abs(t.metric(jx, jy) - t.metric(x, y)));
      bound(std::abs(t.symplectic(jx, jy) - t.symplectic(x, y)));
      const HermitianParts parts = hermitian_parts(x, y);
      bound(std::abs(parts.h - Complex{parts.g, parts.omega}));
      bound(std::abs(parts.h - to_complex(x).dot(to_complex(y))));
      const RealifiedVector jjx = t.complex_structure(jx);
      bound((jjx.coords() + x.coords()).cwiseAbs().maxCoeff());
    }
  }
  return finish(2, "tensor-triple-axioms", 1e-12, algebra_ok);
}

// 3: the moment of a state transforms by conjugation.
bool criterion_equivariance() {
  reset_worst();
  for (int n = 1; n <= 4; ++n) {
    Rng rng(300u + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 25; ++trial) {
      const CMatrix u = random_unitary(rng, n);
      const RealifiedVector psi = random_state(rng, n);
      const CMatrix moved =
          momentum_map(to_real(CVector(u * to_complex(psi)))).matrix();
      bound(max_abs(moved - u * momentum_map(psi).matrix() * u.adjoint()));
    }
  }
  return finish(3, "momentum-equivariance", 1e-12);
}

// 4: connection values on the fibre fields are bit-exact, and the
// projected tensor degenerates exactly there while staying PSD.
bool criterion_connection() {
  reset_worst();
  bool exact = true;
  Rng rng(400u);
  for (int trial = 0; trial < 50; ++trial) {
    const RealifiedVector psi = random_state(rng, 3);
    const RealifiedVector jpsi = apply_complex_structure(psi);
    exact = exact && connection_form(psi, psi) == Complex{1.0, 0.0} &&
            connection_form(psi, jpsi) == Complex{0.0, 1.0};

    const RealifiedVector w = random_state(rng, 3);
    bound(std::abs(fubini_study(psi, psi, w)));
    bound(std::abs(fubini_study(psi, jpsi, w)));
    bound(std::abs(fubini_study(psi, w, psi)));
    bound(std::abs(fubini_study(psi, w, jpsi)));

    CMatrix gram(4, 4);
    std::vector<RealifiedVector> dirs;
    for (int k = 0; k < 4; ++k) dirs.push_back(random_state(rng, 3));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        gram(i, j) = fubini_study(psi, dirs[i], dirs[j]);
      }
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
    exact = exact && es.eigenvalues().minCoeff() >= -1e-10;
  }
  return finish(4, "connection-degeneracy", 1e-12, exact);
}

// 5: the two-level chart is a well-defined map of rays onto the sphere.
bool criterion_bloch() {
  reset_worst();
  Rng rng(500u);
  for (int trial = 0; trial < 200; ++trial) {
    const RealifiedVector psi = random_state(rng, 2);
    const BlochVector x = bloch_map(psi);
    bound(std::abs(x.norm() - 1.0));

    CMatrix chart = 0.5 * pauli(0);
    chart += 0.5 * (x.x1 * pauli(1) + x.x2 * pauli(2) + x.x3 * pauli(3));
    bound(max_abs(pure_projector(psi).matrix() - chart));

    const Complex c = rng.complex_normal() + Complex{2.0, 0.0};
    const BlochVector moved =
        bloch_map(to_real(CVector(c * to_complex(psi))));
    bound((moved.vec() - x.vec()).cwiseAbs().maxCoeff());
  }
  return finish(5, "bloch-consistency", 1e-12);
}

// 6: averaged brackets depend only on the mixture, not its presentation.
bool criterion_decomposition() {
  reset_worst();
  for (int n = 2; n <= 3; ++n) {
    Rng rng(600u + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 50; ++trial) {
      const DensityState rho = random_density(rng, n);
      const MixtureDecomposition d1 = random_decomposition(rng, rho, n + 1);
      const MixtureDecomposition d2 = random_decomposition(rng, rho, n + 2);
      const HermitianOperator a = random_hermitian(rng, n);
      const HermitianOperator b = random_hermitian(rng, n);
      const BracketPair p1 = extended_brackets(d1, a, b);
      const BracketPair p2 = extended_brackets(d2, a, b);
      bound(std::abs(p1.poisson - p2.poisson));
      bound(std::abs(p1.jordan - p2.jordan));
    }
  }
  return finish(6, "decomposition-independence", 1e-10);
}

// 7: the integrator tracks the conjugation flow and its invariants.
bool criterion_flow() {
  reset_worst();
  const double pi = std::acos(-1.0);
  bool drift_ok = true;
  for (int n = 2; n <= 3; ++n) {
    Rng rng(700u + static_cast<std::uint64_t>(n));
    const DensityState rho0 = random_density(rng, n);
    const HermitianOperator h = random_hermitian_bounded(rng, n);
    const Trajectory exact =
        von_neumann_flow(rho0, h, pi, 1e-3, FlowMethod::kExact);
    const Trajectory rk4 =
        von_neumann_flow(rho0, h, pi, 1e-3, FlowMethod::kRk4);
    bound(max_abs(exact.back().state.matrix() - rk4.back().state.matrix()));

    Eigen::SelfAdjointEigenSolver<CMatrix> es0(rho0.matrix(),
                                               Eigen::EigenvaluesOnly);
    for (const TrajectoryPoint& pt : rk4) {
      Eigen::SelfAdjointEigenSolver<CMatrix> es(pt.state.matrix(),
                                                Eigen::EigenvaluesOnly);
      const double spectrum_drift =
          (es.eigenvalues() - es0.eigenvalues()).cwiseAbs().maxCoeff();
      const double purity_drift = std::abs(pt.state.purity() - rho0.purity());
      drift_ok =
          drift_ok && spectrum_drift < 1e-8 && purity_drift < 1e-8;
    }
  }

  const Trajectory precession = von_neumann_flow(
      density_from_bloch(BlochVector{1.0, 0.0, 0.0}), HermitianOperator(
          pauli(3)),
      pi / 2.0, 1e-3, FlowMethod::kRk4);
  const BlochVector end = bloch_of_density(precession.back().state);
  drift_ok = drift_ok &&
             (end.vec() - Eigen::Vector3d{-1.0, 0.0, 0.0}).norm() < 1e-6;
  return finish(7, "flow-oracle", 1e-6, drift_ok);
}

// 8: the orbit pairing takes its reference value and its kernel is the
// commutant, measured through the rank of a Gram matrix.
bool criterion_orbit() {
  reset_worst();
  CMatrix rho01 = CMatrix::Zero(2, 2);
  rho01(0, 0) = 1.0;
  bound(std::abs(orbit_symplectic_form(make_density(rho01), kImag * pauli(1),
                                       kImag * pauli(2)) -
                 2.0));

  bool rank_ok = true;
  Rng rng(800u);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    RVector eigs(n);
    for (int k = 0; k < n; ++k) eigs[k] = k + 1.0 + 0.3 * rng.uniform();
    eigs /= eigs.sum();
    CMatrix rho = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) rho(k, k) = eigs[k];
    const DensityState state = make_density(std::move(rho));

    std::vector<CMatrix> basis;
    for (int k = 0; k < n; ++k) {
      CMatrix e = CMatrix::Zero(n, n);
      e(k, k) = kImag;
      basis.push_back(std::move(e));
    }
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        CMatrix re = CMatrix::Zero(n, n);
        re(j, k) = 1.0;
        re(k, j) = -1.0;
        basis.push_back(re);
        CMatrix im = CMatrix::Zero(n, n);
        im(j, k) = kImag;
        im(k, j) = kImag;
        basis.push_back(std::move(im));
      }
    }
    const int dim = static_cast<int>(basis.size());
    RMatrix gram(dim, dim);
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        gram(a, b) = orbit_symplectic_form(state, basis[a], basis[b]);
      }
    }
    Eigen::BDCSVD<RMatrix> svd(gram);
    const double cutoff = 1e-8 * svd.singularValues()(0);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k) {
      if (svd.singularValues()(k) > cutoff) ++rank;
    }
    rank_ok = rank_ok && rank == n * n - n;
  }
  return finish(8, "orbit-form", 1e-12, rank_ok);
}

// 9: the sphere two-form has a nonvanishing exterior derivative whose
// density at (1, 0, 0) is one.
bool criterion_ball_derivative() {
  reset_worst();
  const double h = 5e-4;
  const Eigen::Vector3d base{1.0, 0.0, 0.0};
  const auto omega = [](const Eigen::Vector3d& at, int i, int j) {
    Eigen::Vector3d ei = Eigen::Vector3d::Zero();
    Eigen::Vector3d ej = Eigen::Vector3d::Zero();
    ei[i] = 1.0;
    ej[j] = 1.0;
    return ball_two_form(BlochVector::from(at), ei, ej);
  };
  double coeff = 0.0;
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& idx : cyc) {
    Eigen::Vector3d up = base, down = base;
    up[idx[0]] += h;
    down[idx[0]] -= h;
    coeff += (omega(up, idx[1], idx[2]) - omega(down, idx[1], idx[2])) /
             (2.0 * h);
  }
  bound(std::abs(coeff - 1.0));
  return finish(9, "ball-two-form-derivative", 1e-5);
}

// 10: two-qubit decompositions, purity accounting, and the product rule.
bool criterion_composite() {
  reset_worst();
  bool extras_ok = true;
  Rng rng(1000u);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityState rho = random_density(rng, 4);
    const PauliDecomposition d = pauli_decompose(rho);
    bound(max_abs(pauli_reconstruct(d) - rho.matrix()));
    const double purity_via_coeffs =
        (1.0 + d.p.squaredNorm() + d.q.squaredNorm() + d.r.squaredNorm()) /
        4.0;
    bound(std::abs(rho.purity() - purity_via_coeffs));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Vector3d n = random_unit_bloch(rng);
    const Eigen::Vector3d m = random_unit_bloch(rng);
    const DensityState rho = separable_pure(n, m);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix(),
                                              Eigen::EigenvaluesOnly);
    extras_ok = extras_ok &&
                std::abs(es.eigenvalues().maxCoeff() - 1.0) <= 1e-10 &&
                std::abs(es.eigenvalues().head(3).cwiseAbs().maxCoeff()) <=
                    1e-10;
    const PauliDecomposition d = pauli_decompose(rho);
    extras_ok = extras_ok && (d.p - n).cwiseAbs().maxCoeff() <= 1e-10 &&
                (d.q - m).cwiseAbs().maxCoeff() <= 1e-10 &&
                (d.r - n * m.transpose()).cwiseAbs().maxCoeff() <= 1e-10;
  }
  for (int trial = 0; trial < 100; ++trial) {
    const CVector z = random_complex_vector(rng, 2);
    const CVector w = random_complex_vector(rng, 2);
    const auto pick = [&rng]() {
      return CoordRef{1 + static_cast<int>(rng.bits() % 2),
                      rng.bits() % 2 == 0};
    };
    const CoordRef m = pick(), n = pick(), r = pick(), s = pick();
    bound(std::abs(product_poisson(m, n, r, s, z, w) -
                   product_poisson_factor_rule(m, n, r, s, z, w)));
  }
  return finish(10, "composite-identities", 1e-12, extras_ok);
}

// 11: builtin gates satisfy their canonical relations.
bool criterion_gates() {
  reset_worst();
  const GeneratingFunction had = builtin_generating(GateName::kHadamard);
  const CMatrix id = CMatrix::Identity(2, 2);
  bound(max_abs(had.u * had.u.adjoint() - id));
  bound(max_abs(had.u * had.u - id));
  bound(max_abs(builtin_generating(GateName::kPhaseShift,
                                   std::acos(-1.0))
                    .u -
                builtin_generating(GateName::kPhase).u));

  Rng rng(1100u);
  const GeneratingFunction gates_to_try[] = {
      had, builtin_generating(GateName::kPhase),
      builtin_generating(GateName::kPhaseShift, 0.7)};
  for (const GeneratingFunction& g : gates_to_try) {
    for (int trial = 0; trial < 100; ++trial) {
      const CVector psi = random_complex_vector(rng, 2);
      bound(canonical_residual(g, psi, CVector(g.u * psi)));
    }
  }
  return finish(11, "gate-relations", 1e-12);
}

// 12: the shipped CLI reproduces the full verification deterministically.
bool criterion_cli(const std::string& cli) {
  reset_worst();
  const auto start = Clock::now();
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path r1 = dir / "qgeom_acceptance_r1.json";
  const fs::path r2 = dir / "qgeom_acceptance_r2.json";

  bool ok = true;
  for (const fs::path& report : {r1, r2}) {
    const std::string cmd = "'" + cli +
                            "' verify --suite all --dim 4 --trials 100 "
                            "--seed 42 --report '" +
                            report.string() + "' > /dev/null";
    ok = ok && std::system(cmd.c_str()) == 0;
  }

  std::string text1, text2;
  for (auto [path, out] : {std::pair{&r1, &text1}, std::pair{&r2, &text2}}) {
    std::ifstream in(*path);
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = buf.str();
    ok = ok && in.good() && !out->empty();
  }
  ok = ok && text1 == text2;
  std::error_code ec;
  fs::remove(r1, ec);
  fs::remove(r2, ec);
  return finish(12, "cli-end-to-end", 0.0, ok, seconds_since(start), 60.0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-qgeom-cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];

  bool all_ok = true;
  all_ok &= criterion_brackets();
  all_ok &= criterion_tensor_triple();
  all_ok &= criterion_equivariance();
  all_ok &= criterion_connection();
  all_ok &= criterion_bloch();
  all_ok &= criterion_decomposition();
  all_ok &= criterion_flow();
  all_ok &= criterion_orbit();
  all_ok &= criterion_ball_derivative();
  all_ok &= criterion_composite();
  all_ok &= criterion_gates();
  all_ok &= criterion_cli(cli);

  std::printf("%s\n", all_ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return all_ok ? 0 : 1;
}
