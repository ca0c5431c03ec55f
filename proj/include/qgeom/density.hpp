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
// The convex body of density states and the structures it carries: bracket
// extensions from pure states, Casimir functions, the Lie-Poisson chart on
// the Bloch ball, symplectic forms on unitary orbits, and the von Neumann
// flow.
//
// Bracket values in this module use the trace normalization: the Poisson
// bracket of the linear functions rho -> Tr(rho A), rho -> Tr(rho B) is
// -i Tr(rho [A, B]).  The extension of the pure-state brackets built on
// f_A = <z, A z>/2 yields exactly half of that; extended_brackets keeps the
// pure-state scale, lie_poisson_bloch the trace scale.

#ifndef QGEOM_DENSITY_HPP_
#define QGEOM_DENSITY_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qgeom/density_state.hpp"
#include "qgeom/observables.hpp"
#include "qgeom/projective.hpp"
#include "qgeom/realified.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  return a * b - b * a;
}

inline CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  return a * b + b * a;
}

// Convex decomposition of a density state into rays with weights.
struct MixtureDecomposition {
  std::vector<double> weights;
  std::vector<RealifiedVector> states;
};

namespace detail {

inline double validate_decomposition(const MixtureDecomposition& d) {
  if (d.weights.empty() || d.weights.size() != d.states.size()) {
    throw std::invalid_argument(
        "decomposition needs matching, nonempty weights and states");
  }
  const auto n = d.states.front().dim();
  double total = 0.0;
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    if (!(d.weights[k] >= 0.0)) {
      throw std::invalid_argument("mixture weights must be nonnegative");
    }
    if (d.states[k].dim() != n) {
      throw std::invalid_argument("dimension mismatch");
    }
    if (d.states[k].squared_norm() == 0.0) {
      throw std::invalid_argument("decomposition states must be nonzero");
    }
    total += d.weights[k];
  }
  if (total <= 0.0) {
    throw std::invalid_argument("mixture weights must not all vanish");
  }
  return total;
}

}  // namespace detail

// rho = sum_k p_k |psi_k><psi_k| / <psi_k, psi_k>, with the weights
// renormalized by their total so any nonnegative weight vector is accepted.
inline DensityState mix(const MixtureDecomposition& d) {
  const double total = detail::validate_decomposition(d);
  const auto n = d.states.front().dim();
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    m += (d.weights[k] / total) * pure_projector(d.states[k]).matrix();
  }
  return make_density(std::move(m));
}

inline double expectation_density(const DensityState& rho,
                                  const HermitianOperator& a) {
  if (rho.dim() != a.dim()) throw std::invalid_argument("dimension mismatch");
  return (rho.matrix() * a.matrix()).trace().real();
}

// Pure-state brackets averaged over a decomposition.  The result depends
// only on mix(d): poisson = Im Tr(rho A B), jordan = Re Tr(rho A B), both
// on the f_A = <z, A z>/2 scale (half the trace normalization).
inline BracketPair extended_brackets(const MixtureDecomposition& d,
                                     const HermitianOperator& a,
                                     const HermitianOperator& b) {
  const double total = detail::validate_decomposition(d);
  const auto n = d.states.front().dim();
  if (a.dim() != n || b.dim() != n) {
    throw std::invalid_argument("dimension mismatch");
  }
  BracketPair out{0.0, 0.0};
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    const double nrm = d.states[k].norm();
    if (std::abs(nrm - 1.0) > 1e-9) {
      throw std::invalid_argument("decomposition states must have unit norm");
    }
    const RealifiedVector unit = (1.0 / nrm) * d.states[k];
    const double p = d.weights[k] / total;
    out.poisson += p * poisson_bracket(a, b, unit);
    out.jordan += p * jordan_bracket(a, b, unit);
  }
  return out;
}

struct CasimirValue {
  int order = 2;
  double value = 0.0;
  // x1^2 + x2^2 + x3^2 of the Bloch vector; present only for n = 2.
  std::optional<double> zeta;
};

// Bloch chart of a two-level density state, x_j = Tr(rho sigma_j).
inline BlochVector bloch_of_density(const DensityState& rho) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("Bloch chart requires a two-level state");
  }
  BlochVector b;
  b.x1 = (rho.matrix() * pauli(1)).trace().real();
  b.x2 = (rho.matrix() * pauli(2)).trace().real();
  b.x3 = (rho.matrix() * pauli(3)).trace().real();
  return b;
}

// rho(x) = (sigma_0 + x . sigma)/2; rejects points outside the closed ball
// through the positivity check.
inline DensityState density_from_bloch(const BlochVector& x) {
  CMatrix m = 0.5 * (pauli(0) + x.x1 * pauli(1) + x.x2 * pauli(2) +
                     x.x3 * pauli(3));
  return make_density(std::move(m));
}

// Tr(rho^k), a Casimir of the Lie-Poisson structure.  For two-level states
// also reports zeta = |x|^2, related to purity by Tr(rho^2) = (1 + zeta)/2.
inline CasimirValue casimir(const DensityState& rho, int k) {
  if (k < 2) throw std::invalid_argument("Casimir order must be at least 2");
  CasimirValue out;
  out.order = k;
  CMatrix power = rho.matrix();
  for (int i = 1; i < k; ++i) power = power * rho.matrix();
  out.value = power.trace().real();
  if (rho.dim() == 2) {
    const BlochVector x = bloch_of_density(rho);
    out.zeta = x.vec().squaredNorm();
  }
  return out;
}

// Lie-Poisson bracket on the Bloch ball of the affine functions
// x -> Tr(rho(x) A), evaluated from the trace formula -i Tr(rho(x) [A, B]).
// Equals twice the poisson component of extended_brackets on any
// decomposition of rho(x).
inline double lie_poisson_bloch(const BlochVector& x,
                                const HermitianOperator& a,
                                const HermitianOperator& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("Bloch bracket requires two-level operators");
  }
  if (x.norm() > 1.0 + 1e-12) {
    throw std::invalid_argument("Bloch vector outside the unit ball");
  }
  const DensityState rho = density_from_bloch(x);
  const CMatrix c = commutator(a.matrix(), b.matrix());
  return (-kImag * (rho.matrix() * c).trace()).real();
}

// J on sphere tangent vectors: v -> (x/|x|) x v.  Squares to -1 on the
// tangent plane; radial covectors (Casimir differentials) are excluded by
// the tangency precondition.
inline Eigen::Vector3d partial_complex_structure(const BlochVector& x,
                                                 const Eigen::Vector3d& v) {
  const Eigen::Vector3d xv = x.vec();
  const double xn = xv.norm();
  if (xn == 0.0) {
    throw std::domain_error("undefined at the center of the ball");
  }
  if (std::abs(xv.dot(v)) > 1e-10 * std::max(1.0, xn * v.norm())) {
    throw std::invalid_argument("tangency violated");
  }
  return (xv / xn).cross(v);
}

// The sphere two-form omega = (x1 dx2^dx3 + x2 dx3^dx1 + x3 dx1^dx2)/|x|^2,
// i.e. omega(v, w) = x . (v x w)/|x|^2.  Inverts the Lie-Poisson raise on
// tangent covectors: omega(2 a x x, w) = 2 a . w whenever a . x = 0.  Its
// exterior derivative is |x|^{-2} dx1^dx2^dx3, so omega is not closed.
inline double ball_two_form(const BlochVector& x, const Eigen::Vector3d& v,
                            const Eigen::Vector3d& w) {
  const Eigen::Vector3d xv = x.vec();
  const double n2 = xv.squaredNorm();
  if (n2 == 0.0) {
    throw std::domain_error("two-form singular at the center of the ball");
  }
  return xv.dot(v.cross(w)) / n2;
}

// Kostant-Kirillov-Souriau pairing on the unitary orbit through rho:
// i Tr(rho [xi1, xi2]) on anti-Hermitian directions.  The factor i makes
// the value real; the form vanishes when either argument commutes with rho.
inline double orbit_symplectic_form(const DensityState& rho,
                                    const CMatrix& xi1, const CMatrix& xi2) {
  const auto n = rho.dim();
  if (xi1.rows() != n || xi1.cols() != n || xi2.rows() != n ||
      xi2.cols() != n) {
    throw std::invalid_argument("dimension mismatch");
  }
  if (max_abs(xi1 + xi1.adjoint()) > tol::kHermitian ||
      max_abs(xi2 + xi2.adjoint()) > tol::kHermitian) {
    throw std::invalid_argument("antihermiticity violated");
  }
  return (kImag * (rho.matrix() * commutator(xi1, xi2)).trace()).real();
}

enum class FlowMethod { kExact, kRk4 };

struct TrajectoryPoint {
  double t = 0.0;
  DensityState state;
};

using Trajectory = std::vector<TrajectoryPoint>;

namespace detail {

inline CMatrix von_neumann_rhs(const CMatrix& h, const CMatrix& rho) {
  return -kImag * (h * rho - rho * h);
}

}  // namespace detail

// Integrates the von Neumann equation d rho/dt = -i [H, rho] from rho0.
//
// The exact method conjugates by exp(-i H t) through the eigendecomposition
// of H.  The rk4 method takes classical Runge-Kutta steps of size t_final/m
// with m chosen so the step never exceeds dt.  Both sample every
// max(1, round(0.01/dt)) steps and always include t = 0 and t = t_final.
inline Trajectory von_neumann_flow(const DensityState& rho0,
                                   const HermitianOperator& h, double t_final,
                                   double dt, FlowMethod method) {
  if (rho0.dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
  if (!(dt > 0.0)) throw std::invalid_argument("step size must be positive");
  if (t_final < 0.0) {
    throw std::invalid_argument("evolution time must be nonnegative");
  }

  Trajectory out;
  out.push_back({0.0, rho0});
  if (t_final == 0.0) return out;

  const auto steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
  const long m = steps < 1 ? 1 : steps;
  const double step = t_final / static_cast<double>(m);
  const long stride = std::max(1L, std::lround(0.01 / dt));

  if (method == FlowMethod::kExact) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix());
    const CMatrix v = es.eigenvectors();
    const RVector lam = es.eigenvalues();
    for (long i = stride; i < m; i += stride) {
      const double t = step * static_cast<double>(i);
      const CVector phase =
          (-kImag * t * lam.cast<Complex>().array()).exp().matrix();
      const CMatrix u = v * phase.asDiagonal() * v.adjoint();
      out.push_back({t, make_density(u * rho0.matrix() * u.adjoint())});
    }
    const CVector phase =
        (-kImag * t_final * lam.cast<Complex>().array()).exp().matrix();
    const CMatrix u = v * phase.asDiagonal() * v.adjoint();
    out.push_back({t_final, make_density(u * rho0.matrix() * u.adjoint())});
    return out;
  }

  CMatrix rho = rho0.matrix();
  for (long i = 1; i <= m; ++i) {
    const CMatrix k1 = detail::von_neumann_rhs(h.matrix(), rho);
    const CMatrix k2 =
        detail::von_neumann_rhs(h.matrix(), rho + 0.5 * step * k1);
    const CMatrix k3 =
        detail::von_neumann_rhs(h.matrix(), rho + 0.5 * step * k2);
    const CMatrix k4 = detail::von_neumann_rhs(h.matrix(), rho + step * k3);
    rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (i == m) {
      out.push_back({t_final, make_density(rho)});
    } else if (i % stride == 0) {
      out.push_back({step * static_cast<double>(i), make_density(rho)});
    }
  }
  return out;
}

}  // namespace qgeom

#endif  // QGEOM_DENSITY_HPP_
