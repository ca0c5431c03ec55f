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
// Unitary maps presented through their generating functions
// S(phi*, psi) = i phi^dagger U psi.  The canonical relations pairing the
// old and new variables hold exactly when phi = U psi; circuits compose at
// the unitary level.

#ifndef QGEOM_GATES_HPP_
#define QGEOM_GATES_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgeom/types.hpp"

namespace qgeom {

struct GeneratingFunction {
  CMatrix u;

  // S(phi*, psi) = i phi^dagger U psi.
  Complex value(const CVector& phi, const CVector& psi) const {
    if (phi.size() != u.rows() || psi.size() != u.cols()) {
      throw std::invalid_argument("dimension mismatch");
    }
    return kImag * (phi.adjoint() * u * psi)(0, 0);
  }
};

enum class GateName { kHadamard, kPhase, kPhaseShift };

inline GateName gate_name_from_string(const std::string& s) {
  if (s == "hadamard") return GateName::kHadamard;
  if (s == "phase") return GateName::kPhase;
  if (s == "phase_shift") return GateName::kPhaseShift;
  throw std::invalid_argument("unknown gate name: " + s);
}

// hadamard: U = (1/sqrt 2)[[1,1],[1,-1]]; phase: U = diag(1,-1);
// phase_shift: U = diag(1, e^{i theta}), the only gate taking an angle.
inline GeneratingFunction builtin_generating(
    GateName name, std::optional<double> theta = std::nullopt) {
  if (name == GateName::kPhaseShift) {
    if (!theta) throw std::invalid_argument("phase shift requires an angle");
  } else if (theta) {
    throw std::invalid_argument("angle only applies to the phase shift gate");
  }
  CMatrix u(2, 2);
  switch (name) {
    case GateName::kHadamard:
      u << 1, 1, 1, -1;
      u /= std::sqrt(2.0);
      break;
    case GateName::kPhase:
      u << 1, 0, 0, -1;
      break;
    case GateName::kPhaseShift:
      u << 1, 0, 0, std::exp(kImag * *theta);
      break;
  }
  return GeneratingFunction{std::move(u)};
}

// Norm of the residual of the canonical relations.  The relation on the psi
// variables, i psi*_k = dS/d psi^k with dS/d psi^k = i (U^T phi*)_k,
// conjugates to psi = U^dagger phi; the companion relation on the phi
// variables conjugates to phi = U psi.  Zero exactly when both hold.
inline double canonical_residual(const GeneratingFunction& s,
                                 const CVector& psi, const CVector& phi) {
  if (s.u.rows() != phi.size() || s.u.cols() != psi.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const CVector r1 =
      kImag * psi.conjugate() - kImag * (s.u.transpose() * phi.conjugate());
  const CVector r2 =
      -kImag * phi.conjugate() + kImag * (s.u.conjugate() * psi.conjugate());
  return std::sqrt(r1.squaredNorm() + r2.squaredNorm());
}

// psi_out = U_k ... U_2 U_1 psi0; the empty circuit is the identity.
inline CVector apply_circuit(const CVector& psi0,
                             const std::vector<GeneratingFunction>& gates) {
  CVector psi = psi0;
  for (const auto& g : gates) {
    if (g.u.cols() != psi.size()) {
      throw std::invalid_argument("dimension mismatch");
    }
    psi = g.u * psi;
  }
  return psi;
}

}  // namespace qgeom

#endif  // QGEOM_GATES_HPP_
