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
// Randomized verification suites.  Each suite draws per-trial seeds from
// (base seed, suite name, trial index) and records the deviation of every
// property; a property fails a trial when its deviation exceeds
// max(tol, floor), where the floor accounts for finite-difference and
// integrator error on the few properties that cannot reach algebraic
// accuracy.  Reports with identical inputs are byte-identical.
//
// Suite dimension notes: the Bloch-chart properties of the projective and
// density suites are intrinsically two-level and run at n = 2 whatever the
// requested dimension; the composite suite is intrinsically two-qubit and
// the gates suite two-level.

#ifndef QGEOM_VERIFY_HPP_
#define QGEOM_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qgeom/composite.hpp"
#include "qgeom/density.hpp"
#include "qgeom/gates.hpp"
#include "qgeom/observables.hpp"
#include "qgeom/projective.hpp"
#include "qgeom/random.hpp"
#include "qgeom/realified.hpp"
#include "qgeom/types.hpp"

namespace qgeom::verify {

struct Failure {
  std::string property;
  int trial = 0;
  double deviation = 0.0;
};

struct Report {
  std::string suite;
  int dim = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::map<std::string, double> max_deviation;
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["dim"] = dim;
    j["trials"] = trials;
    j["seed"] = seed;
    j["tol"] = tol;
    j["pass"] = pass();
    j["max_deviation"] = nlohmann::json::object();
    for (const auto& [name, dev] : max_deviation) {
      j["max_deviation"][name] = dev;
    }
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures) {
      j["failures"].push_back({{"property", f.property},
                               {"trial", f.trial},
                               {"deviation", f.deviation}});
    }
    return j;
  }

  std::string to_json_string() const { return to_json().dump(2) + "\n"; }
};

// Accuracy floors for properties whose residuals are dominated by
// discretization error rather than rounding.
inline double property_floor(std::string_view name) {
  if (name == "fs_closed" || name == "gradient_fd" ||
      name == "homogeneity_quadratic" || name == "homogeneity_linear") {
    return 1e-6;
  }
  if (name == "ball_dform") return 1e-5;
  if (name == "flow_match" || name == "precession") return 1e-6;
  if (name == "flow_spectrum_drift" || name == "flow_purity_drift") {
    return 1e-8;
  }
  return 0.0;
}

class Recorder {
 public:
  explicit Recorder(double tol) : tol_(tol) {}

  void record(const std::string& property, int trial, double deviation) {
    auto [it, inserted] = max_deviation_.try_emplace(property, deviation);
    if (!inserted && deviation > it->second) it->second = deviation;
    const double bound = std::max(tol_, property_floor(property));
    if (!(deviation <= bound)) {
      failures_.push_back({property, trial, deviation});
    }
  }

  std::map<std::string, double> take_max_deviation() {
    return std::move(max_deviation_);
  }
  std::vector<Failure> take_failures() { return std::move(failures_); }

 private:
  double tol_;
  std::map<std::string, double> max_deviation_;
  std::vector<Failure> failures_;
};

namespace detail {

inline std::uint64_t suite_salt(std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::string_view suite,
                                int trial) {
  return derive_seed(derive_seed(seed, suite_salt(suite)),
                     static_cast<std::uint64_t>(trial));
}

inline double vec_dev(const RealifiedVector& a, const RealifiedVector& b) {
  return (a.coords() - b.coords()).cwiseAbs().maxCoeff();
}

inline Eigen::Vector3d pauli_vector(const CMatrix& a) {
  Eigen::Vector3d v;
  for (int j = 0; j < 3; ++j) v[j] = 0.5 * (a * pauli(j + 1)).trace().real();
  return v;
}

inline RVector sorted_eigenvalues(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Finite-difference exterior derivative of a two-form along coordinate
// directions a, b, c at x:
//   (d omega)(e_a, e_b, e_c) =
//     d_a omega(e_b, e_c) - d_b omega(e_a, e_c) + d_c omega(e_a, e_b).
template <typename TwoForm>
double fd_exterior_derivative(const TwoForm& omega, const RVector& x, int a,
                              int b, int c, double h) {
  const auto partial = [&](int dir, int i, int j) {
    RVector up = x;
    RVector down = x;
    up[dir] += h;
    down[dir] -= h;
    return (omega(up, i, j) - omega(down, i, j)) / (2.0 * h);
  };
  return partial(a, b, c) - partial(b, a, c) + partial(c, a, b);
}

}  // namespace detail

inline void run_realified_suite(Recorder& rec, int dim, int trials,
                                std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(dim);
  TensorTriple t(n);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(detail::trial_seed(seed, "realified", trial));
    const RealifiedVector x = random_state(rng, n);
    const RealifiedVector y = random_state(rng, n);
    const CVector zx = to_complex(x);
    const CVector zy = to_complex(y);

    rec.record("roundtrip", trial, detail::vec_dev(to_real(zx), x));
    rec.record("j_squared", trial,
               detail::vec_dev(apply_complex_structure(
                                   apply_complex_structure(x)),
                               -1.0 * x));
    rec.record("multiplication_by_i", trial,
               (to_complex(apply_complex_structure(x)) - kImag * zx)
                   .cwiseAbs()
                   .maxCoeff());

    const RealifiedVector jx = t.complex_structure(x);
    const RealifiedVector jy = t.complex_structure(y);
    rec.record("metric_j_invariance", trial,
               std::abs(t.metric(jx, jy) - t.metric(x, y)));
    rec.record("symplectic_j_invariance", trial,
               std::abs(t.symplectic(jx, jy) - t.symplectic(x, y)));
    rec.record("compatibility", trial,
               std::abs(t.metric(x, y) - t.symplectic(x, jy)));

    const HermitianParts parts = hermitian_parts(x, y);
    rec.record("hermitian_oracle", trial, std::abs(parts.h - zx.dot(zy)));
    rec.record("parts_exact", trial,
               std::abs(parts.h - Complex{parts.g, parts.omega}));

    if (trial == 0) {
      const RMatrix g_mat = t.jordan_matrix();
      const RMatrix jl = t.complex_structure_matrix() * t.poisson_matrix();
      rec.record("g_equals_j_lambda", trial, (g_mat - jl).cwiseAbs().maxCoeff());
    }
    double mdev = (t.complex_structure_matrix() * x.coords() -
                   apply_complex_structure(x).coords())
                      .cwiseAbs()
                      .maxCoeff();
    mdev = std::max(mdev, std::abs(x.coords().dot(t.symplectic_matrix() *
                                                  y.coords()) -
                                   t.symplectic(x, y)));
    mdev = std::max(
        mdev, std::abs(x.coords().dot(t.poisson_matrix() * y.coords()) -
                       t.poisson(x.coords(), y.coords())));
    rec.record("matrix_consistency", trial, mdev);

    const auto fields = canonical_fields(x);
    rec.record("canonical_fields", trial,
               std::max(detail::vec_dev(fields.dilation, x),
                        detail::vec_dev(fields.phase,
                                        apply_complex_structure(x))));

    const auto norm2 = [](const RealifiedVector& v) {
      return v.squared_norm();
    };
    rec.record("homogeneity_quadratic", trial,
               std::abs(homogeneity_degree(norm2, x) - 2.0));
    const RVector c = random_state(rng, n).coords();
    const auto linear = [&c](const RealifiedVector& v) {
      return c.dot(v.coords());
    };
    if (std::abs(linear(x)) > 1e-3) {
      rec.record("homogeneity_linear", trial,
                 std::abs(homogeneity_degree(linear, x) - 1.0));
    }
  }
}

inline void run_brackets_suite(Recorder& rec, int dim, int trials,
                               std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(dim);
  TensorTriple t(n);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(detail::trial_seed(seed, "brackets", trial));
    const HermitianOperator a = random_hermitian(rng, n);
    const HermitianOperator b = random_hermitian(rng, n);
    const HermitianOperator cop = random_hermitian(rng, n);
    const RealifiedVector x = to_real(random_unit_vector(rng, n));
    const CVector z = to_complex(x);

    const double p = poisson_bracket(a, b, x);
    const double jb = jordan_bracket(a, b, x);
    const Complex z_ab = z.dot(a.matrix() * (b.matrix() * z));
    rec.record("eq15_product_imag", trial, std::abs(p - z_ab.imag()));
    rec.record("eq16_product_real", trial, std::abs(jb - z_ab.real()));

    const CMatrix comm = commutator(a.matrix(), b.matrix());
    const HermitianOperator mic(-kImag * comm);
    rec.record("eq15_commutator_function", trial,
               std::abs(p - quadratic_form(mic.matrix(), x).real()));
    const CMatrix anti = anticommutator(a.matrix(), b.matrix());
    rec.record("eq16_anticommutator_function", trial,
               std::abs(jb - quadratic_form(anti, x).real()));

    rec.record("poisson_antisymmetry", trial,
               std::abs(p + poisson_bracket(b, a, x)));
    rec.record("jordan_symmetry", trial,
               std::abs(jb - jordan_bracket(b, a, x)));

    const CMatrix general = random_complex_matrix(rng, n);
    rec.record("quadratic_form_oracle", trial,
               std::abs(2.0 * quadratic_form(general, x) -
                        z.dot(general * z)));

    const double scale = 0.5 + rng.uniform();
    rec.record("expectation_scale_invariance", trial,
               std::abs(expectation(a, scale * x) - expectation(a, x)));
    rec.record("expectation_oracle", trial,
               std::abs(expectation(a, x) -
                        (z.dot(a.matrix() * z)).real() / z.squaredNorm()));

    const auto fields_a = operator_fields(a, x);
    const auto fields_b = operator_fields(b, x);
    const RealifiedVector xa = t.hamiltonian_field(fields_a.gradient.coords());
    const RealifiedVector xb = t.hamiltonian_field(fields_b.gradient.coords());
    rec.record("hamiltonian_schrodinger", trial,
               detail::vec_dev(xa, to_real(CVector(-kImag *
                                                   (a.matrix() * z)))));
    rec.record("rotated_field", trial,
               detail::vec_dev(fields_a.rotated,
                               to_real(CVector(kImag * (a.matrix() * z)))));
    rec.record("omega_of_fields", trial, std::abs(t.symplectic(xa, xb) - p));

    const RealifiedVector u = random_state(rng, n);
    const double h = 1e-5;
    const auto f_a = [&](const RealifiedVector& v) {
      return quadratic_form(a.matrix(), v).real();
    };
    const double fd = (f_a(x + h * u) - f_a(x - h * u)) / (2.0 * h);
    rec.record("gradient_fd", trial,
               std::abs(fd - fields_a.gradient.coords().dot(u.coords())));

    const HermitianOperator d_bc(-kImag *
                                 commutator(b.matrix(), cop.matrix()));
    const HermitianOperator d_ca(-kImag *
                                 commutator(cop.matrix(), a.matrix()));
    const HermitianOperator d_ab(-kImag * comm);
    const double jacobi = poisson_bracket(a, d_bc, x) +
                          poisson_bracket(b, d_ca, x) +
                          poisson_bracket(cop, d_ab, x);
    rec.record("jacobi_identity", trial, std::abs(jacobi));

    const double fb = quadratic_form(b.matrix(), x).real();
    const double fc = quadratic_form(cop.matrix(), x).real();
    const RVector da = fields_a.gradient.coords();
    const RVector db = fields_b.gradient.coords();
    const RVector dc = operator_fields(cop, x).gradient.coords();
    const RVector d_prod = fb * dc + fc * db;
    const BracketPair lhs = bracket_general(da, d_prod, x);
    const double rhs_p = fb * poisson_bracket(a, cop, x) + fc * p;
    const double rhs_j = fb * jordan_bracket(a, cop, x) + fc * jb;
    rec.record("leibniz_rule", trial,
               std::max(std::abs(lhs.poisson - rhs_p),
                        std::abs(lhs.jordan - rhs_j)));
  }
}

inline void run_projective_suite(Recorder& rec, int dim, int trials,
                                 std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(dim);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(detail::trial_seed(seed, "projective", trial));
    const RealifiedVector psi = to_real(random_unit_vector(rng, n));
    const CVector z = to_complex(psi);
    const RealifiedVector v = random_state(rng, n);
    const RealifiedVector w = random_state(rng, n);

    const CMatrix u = random_unitary(rng, n);
    const AntiHermitianMoment f = momentum_map(psi);
    const AntiHermitianMoment fu = momentum_map(to_real(CVector(u * z)));
    rec.record("equivariance", trial,
               max_abs(fu.matrix() - u * f.matrix() * u.adjoint()));

    rec.record("momentum_projector_link", trial,
               max_abs(kImag * f.matrix() / psi.squared_norm() -
                       pure_projector(psi).matrix()));

    rec.record("connection_dilation", trial,
               std::abs(connection_form(psi, psi) - Complex{1.0, 0.0}));
    rec.record("connection_phase", trial,
               std::abs(connection_form(psi, apply_complex_structure(psi)) -
                        kImag));
    rec.record("horizontality", trial,
               std::abs(connection_form(psi, horizontal_projection(psi, v))));

    const RealifiedVector jpsi = apply_complex_structure(psi);
    double deg = std::abs(fubini_study(psi, psi, w));
    deg = std::max(deg, std::abs(fubini_study(psi, jpsi, w)));
    deg = std::max(deg, std::abs(fubini_study(psi, v, psi)));
    deg = std::max(deg, std::abs(fubini_study(psi, v, jpsi)));
    rec.record("fs_fibre_degeneracy", trial, deg);

    rec.record("fs_conjugate_symmetry", trial,
               std::abs(fubini_study(psi, v, w) -
                        std::conj(fubini_study(psi, w, v))));

    const CVector hv = to_complex(horizontal_projection(psi, v));
    const CVector hw = to_complex(horizontal_projection(psi, w));
    rec.record("fs_horizontal_route", trial,
               std::abs(fubini_study(psi, v, w) -
                        hv.dot(hw) / psi.squared_norm()));

    // The tensor is invariant under psi -> c psi once the tangent vectors
    // are transported along the same rescaling; with fixed tangents it
    // picks up the factor 1/|c|^2 instead.
    const Complex c = rng.complex_normal() + Complex{2.0, 0.0};
    const RealifiedVector psi_scaled = to_real(CVector(c * z));
    const Complex fs_base = fubini_study(psi, v, w);
    rec.record("fs_scale_invariance", trial,
               std::abs(fubini_study(psi_scaled,
                                     to_real(CVector(c * to_complex(v))),
                                     to_real(CVector(c * to_complex(w)))) -
                        fs_base));
    rec.record("fs_scale_homogeneity", trial,
               std::abs(std::norm(c) * fubini_study(psi_scaled, v, w) -
                        fs_base));

    if (n >= 2) {
      const int k = static_cast<int>(std::min<Eigen::Index>(4, 2 * n - 2));
      std::vector<RealifiedVector> lifts;
      lifts.reserve(k);
      for (int i = 0; i < k; ++i) {
        lifts.push_back(horizontal_projection(psi, random_state(rng, n)));
      }
      RMatrix gram(k, k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          gram(i, j) = fubini_study(psi, lifts[i], lifts[j]).real();
        }
      }
      Eigen::SelfAdjointEigenSolver<RMatrix> es(gram, Eigen::EigenvaluesOnly);
      rec.record("fs_gram_psd", trial,
                 std::max(0.0, -es.eigenvalues().minCoeff()));

      const auto omega_fs = [&n](const RVector& base, int i, int j) {
        RVector ei = RVector::Zero(2 * n);
        RVector ej = RVector::Zero(2 * n);
        ei[i] = 1.0;
        ej[j] = 1.0;
        return fubini_study(RealifiedVector(base), RealifiedVector(ei),
                            RealifiedVector(ej))
            .imag();
      };
      const int total = static_cast<int>(2 * n);
      const int ia = static_cast<int>(rng.bits() % total);
      int ib = static_cast<int>(rng.bits() % total);
      while (ib == ia) ib = static_cast<int>(rng.bits() % total);
      int ic = static_cast<int>(rng.bits() % total);
      while (ic == ia || ic == ib) ic = static_cast<int>(rng.bits() % total);
      rec.record("fs_closed", trial,
                 std::abs(detail::fd_exterior_derivative(
                     omega_fs, psi.coords(), ia, ib, ic, 1e-4)));
    }

    // Bloch chart properties, intrinsically two-level.
    const RealifiedVector psi2 = to_real(random_nonzero_vector(rng, 2));
    const BlochVector x = bloch_map(psi2);
    rec.record("bloch_unit", trial, std::abs(x.norm() - 1.0));
    const CMatrix rho_x = 0.5 * (pauli(0) + x.x1 * pauli(1) +
                                 x.x2 * pauli(2) + x.x3 * pauli(3));
    rec.record("bloch_projector", trial,
               max_abs(pure_projector(psi2).matrix() - rho_x));
    const Complex c2 = rng.complex_normal() + Complex{2.0, 0.0};
    const BlochVector x_scaled =
        bloch_map(to_real(CVector(c2 * to_complex(psi2))));
    rec.record("bloch_invariance", trial,
               (x_scaled.vec() - x.vec()).cwiseAbs().maxCoeff());
  }
}

inline void run_density_suite(Recorder& rec, int dim, int trials,
                              std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(dim);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(detail::trial_seed(seed, "density", trial));
    const DensityState rho = random_density(rng, n);
    const HermitianOperator a = random_hermitian(rng, n);
    const HermitianOperator b = random_hermitian(rng, n);

    const MixtureDecomposition d1 =
        random_decomposition(rng, rho, static_cast<int>(n));
    const MixtureDecomposition d2 =
        random_decomposition(rng, rho, static_cast<int>(n) + 2);
    const BracketPair e1 = extended_brackets(d1, a, b);
    const BracketPair e2 = extended_brackets(d2, a, b);
    rec.record("decomposition_independence", trial,
               std::max(std::abs(e1.poisson - e2.poisson),
                        std::abs(e1.jordan - e2.jordan)));

    const Complex tr_ab =
        (rho.matrix() * a.matrix() * b.matrix()).trace();
    rec.record("extended_trace_oracle", trial,
               std::max(std::abs(e1.poisson - tr_ab.imag()),
                        std::abs(e1.jordan - tr_ab.real())));

    rec.record("mix_reconstruction", trial,
               max_abs(mix(d1).matrix() - rho.matrix()));

    double lin = 0.0;
    double total = 0.0;
    for (const auto& wgt : d1.weights) total += wgt;
    for (std::size_t k = 0; k < d1.weights.size(); ++k) {
      lin += d1.weights[k] / total * expectation(a, d1.states[k]);
    }
    rec.record("expectation_linearity", trial,
               std::abs(expectation_density(rho, a) - lin));

    const CMatrix u = random_unitary(rng, n);
    const DensityState rho_u =
        make_density(u * rho.matrix() * u.adjoint());
    rec.record(
        "casimir_invariance", trial,
        std::max(
            std::abs(casimir(rho_u, 2).value - casimir(rho, 2).value),
            std::abs(casimir(rho_u, 3).value - casimir(rho, 3).value)));

    const CMatrix xi1 = kImag * random_hermitian(rng, n).matrix();
    const CMatrix xi2 = kImag * random_hermitian(rng, n).matrix();
    rec.record("orbit_antisymmetry", trial,
               std::abs(orbit_symplectic_form(rho, xi1, xi2) +
                        orbit_symplectic_form(rho, xi2, xi1)));
    rec.record("orbit_extends_poisson", trial,
               std::abs(orbit_symplectic_form(rho, kImag * a.matrix(),
                                              kImag * b.matrix()) -
                        2.0 * e1.poisson));

    // Kernel of the orbit form at a diagonal state with distinct spectrum:
    // exactly the diagonal (commuting) directions, so the Gram matrix over
    // a u(n) basis has rank n^2 - n.
    {
      RVector probs(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        probs[i] = static_cast<double>(i + 1) + 0.3 * rng.uniform();
      }
      probs /= probs.sum();
      const DensityState rho_diag =
          make_density(probs.cast<Complex>().asDiagonal());
      std::vector<CMatrix> basis;
      basis.reserve(static_cast<std::size_t>(n * n));
      for (Eigen::Index k = 0; k < n; ++k) {
        CMatrix m = CMatrix::Zero(n, n);
        m(k, k) = kImag;
        basis.push_back(m);
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
          CMatrix m = CMatrix::Zero(n, n);
          m(j, k) = 1.0;
          m(k, j) = -1.0;
          basis.push_back(m);
          CMatrix mi = CMatrix::Zero(n, n);
          mi(j, k) = kImag;
          mi(k, j) = kImag;
          basis.push_back(mi);
        }
      }
      const auto m_total = static_cast<Eigen::Index>(basis.size());
      RMatrix gram(m_total, m_total);
      double diag_pairing = 0.0;
      for (Eigen::Index i = 0; i < m_total; ++i) {
        for (Eigen::Index j = 0; j < m_total; ++j) {
          gram(i, j) = orbit_symplectic_form(rho_diag, basis[i], basis[j]);
          if (i < n) diag_pairing = std::max(diag_pairing,
                                             std::abs(gram(i, j)));
        }
      }
      rec.record("orbit_isotropy_pairing", trial, diag_pairing);
      Eigen::BDCSVD<RMatrix> svd(gram);
      const double cut = 1e-8 * static_cast<double>(n);
      Eigen::Index rank = 0;
      for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()[i] > cut) ++rank;
      }
      rec.record("orbit_kernel_rank", trial,
                 std::abs(static_cast<double>(rank - (n * n - n))));
    }

    // Flow properties.
    {
      const HermitianOperator h = random_hermitian_bounded(rng, n);
      const double t_final = 0.5;
      const double dt = 1e-3;
      const Trajectory exact =
          von_neumann_flow(rho, h, t_final, dt, FlowMethod::kExact);
      const Trajectory rk4 =
          von_neumann_flow(rho, h, t_final, dt, FlowMethod::kRk4);
      rec.record("flow_match", trial,
                 max_abs(exact.back().state.matrix() -
                         rk4.back().state.matrix()));
      const RVector spec0 = detail::sorted_eigenvalues(rho.matrix());
      double spec_drift = 0.0;
      double purity_drift = 0.0;
      for (const auto& point : rk4) {
        spec_drift = std::max(
            spec_drift,
            (detail::sorted_eigenvalues(point.state.matrix()) - spec0)
                .cwiseAbs()
                .maxCoeff());
        purity_drift = std::max(
            purity_drift, std::abs(point.state.purity() - rho.purity()));
      }
      rec.record("flow_spectrum_drift", trial, spec_drift);
      rec.record("flow_purity_drift", trial, purity_drift);
    }

    // Bloch-ball properties, intrinsically two-level.
    const HermitianOperator a2 = random_hermitian(rng, 2);
    const HermitianOperator b2 = random_hermitian(rng, 2);
    const double radius = 0.2 + 0.79 * rng.uniform();
    const BlochVector x =
        BlochVector::from(radius * random_unit_bloch(rng));
    const double lpb = lie_poisson_bloch(x, a2, b2);

    const MixtureDecomposition dx =
        random_decomposition(rng, density_from_bloch(x), 3);
    rec.record("lie_poisson_factor", trial,
               std::abs(lpb - 2.0 * extended_brackets(dx, a2, b2).poisson));

    const Eigen::Vector3d av = detail::pauli_vector(a2.matrix());
    const Eigen::Vector3d bv = detail::pauli_vector(b2.matrix());
    rec.record("lie_poisson_structure", trial,
               std::abs(lpb - 2.0 * av.cross(bv).dot(x.vec())));

    const HermitianOperator central(rng.normal() * CMatrix::Identity(2, 2));
    rec.record("casimir_centrality", trial,
               std::abs(lie_poisson_bloch(x, central, b2)));

    const DensityState rho2 = random_density(rng, 2);
    const CasimirValue c2 = casimir(rho2, 2);
    rec.record("casimir_purity", trial,
               std::abs(c2.value - 0.5 * (1.0 + c2.zeta.value())));

    const Eigen::Vector3d xs = random_unit_bloch(rng);
    const BlochVector x_unit = BlochVector::from(xs);
    const Eigen::Vector3d tang_a = 2.0 * (av - av.dot(xs) * xs);
    rec.record("jg_lambda", trial,
               (partial_complex_structure(x_unit, tang_a) -
                2.0 * xs.cross(av))
                   .cwiseAbs()
                   .maxCoeff());

    const Eigen::Vector3d vv = random_unit_bloch(rng);
    const Eigen::Vector3d v_tang = vv - vv.dot(xs) * xs;
    rec.record("ball_j_squared", trial,
               (partial_complex_structure(
                    x_unit, partial_complex_structure(x_unit, v_tang)) +
                v_tang)
                   .cwiseAbs()
                   .maxCoeff());

    const Eigen::Vector3d alpha = bv - bv.dot(x.vec()) * x.vec() /
                                           x.vec().squaredNorm();
    const Eigen::Vector3d field = 2.0 * alpha.cross(x.vec());
    const Eigen::Vector3d wv = random_unit_bloch(rng);
    rec.record("ball_inverse", trial,
               std::abs(ball_two_form(x, field, wv) - 2.0 * alpha.dot(wv)));

    {
      const auto omega_ball = [](const RVector& base, int i, int j) {
        Eigen::Vector3d ei = Eigen::Vector3d::Zero();
        Eigen::Vector3d ej = Eigen::Vector3d::Zero();
        ei[i] = 1.0;
        ej[j] = 1.0;
        return ball_two_form(BlochVector{base[0], base[1], base[2]}, ei, ej);
      };
      const Eigen::Vector3d base =
          trial == 0 ? Eigen::Vector3d{1.0, 0.0, 0.0}
                     : Eigen::Vector3d((0.5 + 0.49 * rng.uniform()) *
                                       random_unit_bloch(rng));
      RVector base_v(3);
      base_v << base[0], base[1], base[2];
      const double coeff = detail::fd_exterior_derivative(
          omega_ball, base_v, 0, 1, 2, 5e-4);
      rec.record("ball_dform", trial,
                 std::abs(coeff * base.squaredNorm() - 1.0));
    }

    if (trial == 0) {
      const DensityState rho0 =
          density_from_bloch(BlochVector{1.0, 0.0, 0.0});
      const HermitianOperator h3(pauli(3));
      const Trajectory traj = von_neumann_flow(
          rho0, h3, std::acos(-1.0) / 2.0, 1e-3, FlowMethod::kRk4);
      const BlochVector xf = bloch_of_density(traj.back().state);
      rec.record("precession", 0,
                 (xf.vec() - Eigen::Vector3d{-1.0, 0.0, 0.0})
                     .cwiseAbs()
                     .maxCoeff());
    }
  }
}

inline void run_composite_suite(Recorder& rec, int /*dim*/, int trials,
                                std::uint64_t seed) {
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(detail::trial_seed(seed, "composite", trial));
    const CVector z = random_nonzero_vector(rng, 2);
    const CVector w = random_nonzero_vector(rng, 2);
    const CVector u = tensor_state(z, w);
    rec.record("tensor_norm", trial,
               std::abs(u.norm() - z.norm() * w.norm()));

    const Eigen::Vector3d nv = random_unit_bloch(rng);
    const Eigen::Vector3d mv = random_unit_bloch(rng);
    const DensityState sep = separable_pure(nv, mv);
    const RVector eigs = detail::sorted_eigenvalues(sep.matrix());
    double rank_dev = std::abs(eigs[3] - 1.0);
    for (int i = 0; i < 3; ++i) rank_dev = std::max(rank_dev,
                                                    std::abs(eigs[i]));
    rec.record("separable_rank_one", trial, rank_dev);

    const PauliDecomposition pd = pauli_decompose(sep);
    double dec_dev = (pd.p - nv).cwiseAbs().maxCoeff();
    dec_dev = std::max(dec_dev, (pd.q - mv).cwiseAbs().maxCoeff());
    dec_dev = std::max(
        dec_dev,
        (pd.r - nv * mv.transpose()).cwiseAbs().maxCoeff());
    rec.record("separable_decomposition", trial, dec_dev);

    const auto bloch_lift = [](const Eigen::Vector3d& x) {
      const double theta = std::acos(std::clamp(x[2], -1.0, 1.0));
      const double phi = std::atan2(x[1], x[0]);
      CVector v(2);
      v << std::cos(theta / 2.0),
          std::exp(kImag * phi) * std::sin(theta / 2.0);
      return v;
    };
    rec.record(
        "separable_projector", trial,
        max_abs(sep.matrix() -
                pure_projector(
                    to_real(tensor_state(bloch_lift(nv), bloch_lift(mv))))
                    .matrix()));

    const DensityState rho = random_density(rng, 4);
    const PauliDecomposition d = pauli_decompose(rho);
    rec.record("pauli_roundtrip", trial,
               max_abs(pauli_reconstruct(d) - rho.matrix()));

    const double coeff_sq = d.p.squaredNorm() + d.q.squaredNorm() +
                            d.r.squaredNorm();
    rec.record("purity_identity", trial,
               std::abs(rho.purity() - 0.25 * (1.0 + coeff_sq)));
    rec.record("purity_bound", trial, std::max(0.0, coeff_sq - 3.0));

    const CartanForm cf = cartan_canonical_form(rho);
    CMatrix diag = cartan_lambda(0);
    for (int k = 0; k < 3; ++k) diag += cf.p[k] * cartan_lambda(k + 1);
    diag *= 0.25;
    rec.record("cartan_reconstruction", trial,
               max_abs(cf.u * diag * cf.u.adjoint() - rho.matrix()));
    rec.record("cartan_unitarity", trial,
               max_abs(cf.u.adjoint() * cf.u - CMatrix::Identity(4, 4)));

    const RVector spec = detail::sorted_eigenvalues(rho.matrix());
    double spec_dev = 0.0;
    double order_dev = 0.0;
    double range_dev = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double di = diag(i, i).real();
      spec_dev = std::max(spec_dev, std::abs(di - spec[3 - i]));
      if (i > 0) {
        order_dev = std::max(order_dev, diag(i, i).real() -
                                            diag(i - 1, i - 1).real());
      }
      range_dev = std::max({range_dev, -di, di - 1.0});
    }
    rec.record("cartan_spectrum", trial, spec_dev);
    rec.record("cartan_descending", trial, std::max(0.0, order_dev));
    rec.record("cartan_diagonal_range", trial, std::max(0.0, range_dev));

    const auto random_ref = [&rng]() {
      return CoordRef{static_cast<int>(rng.bits() % 2) + 1,
                      (rng.bits() & 1) != 0};
    };
    const CoordRef rm = random_ref();
    const CoordRef rn = random_ref();
    const CoordRef rr = random_ref();
    const CoordRef rs = random_ref();
    rec.record("product_rule", trial,
               std::abs(product_poisson(rm, rn, rr, rs, z, w) -
                        product_poisson_factor_rule(rm, rn, rr, rs, z, w)));

    if (trial == 0) {
      CVector e1(2), e2(2);
      e1 << 1, 0;
      e2 << 0, 1;
      CVector expected(4);
      expected << 0, 1, 0, 0;
      rec.record("tensor_ordering", 0,
                 (tensor_state(e1, e2) - expected).cwiseAbs().maxCoeff());

      rec.record("product_commuting_example", 0,
                 std::abs(product_poisson({1, false}, {1, false}, {1, false},
                                          {2, false}, z, w)));
      rec.record(
          "product_conjugate_example", 0,
          std::abs(product_poisson({1, false}, {1, false}, {1, true},
                                   {1, false}, z, w) -
                   Complex{0.0, -2.0} * w[0] * w[0]));

      CVector bell(4);
      bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
      const PauliDecomposition bd =
          pauli_decompose(pure_projector(to_real(bell)));
      Eigen::Matrix3d r_expected = Eigen::Matrix3d::Zero();
      r_expected.diagonal() << 1.0, -1.0, 1.0;
      double bell_dev = bd.p.cwiseAbs().maxCoeff();
      bell_dev = std::max(bell_dev, bd.q.cwiseAbs().maxCoeff());
      bell_dev =
          std::max(bell_dev, (bd.r - r_expected).cwiseAbs().maxCoeff());
      rec.record("bell_decomposition", 0, bell_dev);
    }
  }
}

inline void run_gates_suite(Recorder& rec, int /*dim*/, int trials,
                            std::uint64_t seed) {
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(detail::trial_seed(seed, "gates", trial));
    const double theta =
        2.0 * std::acos(-1.0) * rng.uniform() - std::acos(-1.0);
    const std::vector<GeneratingFunction> builtins = {
        builtin_generating(GateName::kHadamard),
        builtin_generating(GateName::kPhase),
        builtin_generating(GateName::kPhaseShift, theta)};

    const CVector psi = random_nonzero_vector(rng, 2);
    double unitarity = 0.0;
    double residual = 0.0;
    double scaling = 0.0;
    for (const auto& g : builtins) {
      unitarity = std::max(
          unitarity,
          max_abs(g.u.adjoint() * g.u - CMatrix::Identity(2, 2)));
      const CVector phi = g.u * psi;
      residual = std::max(residual, canonical_residual(g, psi, phi));
      scaling = std::max(
          scaling, std::abs(canonical_residual(g, psi, CVector(2.0 * phi)) -
                            std::sqrt(2.0) * psi.norm()));
      rec.record("generating_value", trial,
                 std::abs(g.value(phi, psi) - kImag * phi.squaredNorm()));
    }
    rec.record("builtin_unitarity", trial, unitarity);
    rec.record("residual_forward", trial, residual);
    rec.record("residual_scaling", trial, scaling);

    const GeneratingFunction h = builtins[0];
    const BlochVector x = bloch_map(to_real(psi));
    const BlochVector hx = bloch_map(to_real(CVector(h.u * psi)));
    rec.record("bloch_involution", trial,
               (hx.vec() - Eigen::Vector3d{x.x3, -x.x2, x.x1})
                   .cwiseAbs()
                   .maxCoeff());

    std::vector<GeneratingFunction> circuit;
    for (int i = 0; i < 3; ++i) {
      circuit.push_back(builtins[rng.bits() % 3]);
    }
    const CMatrix product = circuit[2].u * circuit[1].u * circuit[0].u;
    const CVector out = apply_circuit(psi, circuit);
    rec.record("circuit_product", trial,
               (out - product * psi).cwiseAbs().maxCoeff());
    rec.record("circuit_norm", trial, std::abs(out.norm() - psi.norm()));

    if (trial == 0) {
      rec.record("hadamard_involution", 0,
                 max_abs(h.u * h.u - CMatrix::Identity(2, 2)));
      rec.record(
          "phase_shift_pi", 0,
          max_abs(builtin_generating(GateName::kPhaseShift, std::acos(-1.0))
                      .u -
                  builtin_generating(GateName::kPhase).u));
      rec.record("phase_shift_zero", 0,
                 max_abs(builtin_generating(GateName::kPhaseShift, 0.0).u -
                         CMatrix::Identity(2, 2)));
      CVector e1(2);
      e1 << 1, 0;
      rec.record("circuit_involution_example", 0,
                 (apply_circuit(e1, {h, h}) - e1).cwiseAbs().maxCoeff());
      CVector plus(2);
      plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
      rec.record("circuit_hadamard_example", 0,
                 (apply_circuit(e1, {h}) - plus).cwiseAbs().maxCoeff());
      rec.record("circuit_empty_example", 0,
                 (apply_circuit(psi, {}) - psi).cwiseAbs().maxCoeff());
    }
  }
}

inline Report run_verify(const std::string& suite, int dim, int trials,
                         double tol, std::uint64_t seed) {
  static const std::vector<std::string> known = {
      "realified", "brackets", "projective", "density",
      "composite", "gates",    "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  if (dim < 1 || dim > 16) {
    throw std::invalid_argument("dim must be in [1, 16]");
  }
  if (trials < 1) throw std::invalid_argument("trials must be positive");

  Recorder rec(tol);
  const bool all = suite == "all";
  if (all || suite == "realified") {
    run_realified_suite(rec, dim, trials, seed);
  }
  if (all || suite == "brackets") run_brackets_suite(rec, dim, trials, seed);
  if (all || suite == "projective") {
    run_projective_suite(rec, dim, trials, seed);
  }
  if (all || suite == "density") run_density_suite(rec, dim, trials, seed);
  if (all || suite == "composite") {
    run_composite_suite(rec, dim, trials, seed);
  }
  if (all || suite == "gates") run_gates_suite(rec, dim, trials, seed);

  Report report;
  report.suite = suite;
  report.dim = dim;
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  report.max_deviation = rec.take_max_deviation();
  report.failures = rec.take_failures();
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) {
              if (a.property != b.property) return a.property < b.property;
              return a.trial < b.trial;
            });
  return report;
}

}  // namespace qgeom::verify

#endif  // QGEOM_VERIFY_HPP_
