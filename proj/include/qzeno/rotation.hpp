// Copyright 2026 The qzeno Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "qzeno/constants.hpp"
#include "qzeno/errors.hpp"
#include "qzeno/operators.hpp"
#include "qzeno/state.hpp"

namespace qzeno {

/**
 * @brief A bounded Hermitian generator K with exp(-iK) phi = psi, plus the
 * plane-rotation data it is built from.
 *
 * Writing <phi|psi> = exp(-i delta) |<phi|psi>| with delta in [0, 2pi),
 * and cos(theta) = |<phi|psi>| with theta in [0, pi/2], the target
 * decomposes as exp(i delta) psi = cos(theta) phi + sin(theta) phi_perp
 * for a unit vector phi_perp orthogonal to phi. Then
 *
 *   K = -i theta |phi><phi_perp| + i theta |phi_perp><phi| + delta I
 *
 * generates the rotation: exp(-i t K) phi = exp(-i t delta)
 * (cos(t theta) phi + sin(t theta) phi_perp), which lands on psi at t = 1.
 * The operator norm of K never exceeds theta + delta.
 *
 * `phi_perp` is absent exactly when |<phi|psi>| = 1 within
 * tol::parallel_cut; there K degenerates to delta I.
 */
struct RotationDecomposition {
  double theta = 0.0;
  double delta = 0.0;
  std::optional<StateVector> phi_perp;
  HermitianOperator generator;
  StateVector source;
};

/**
 * @brief Builds the rotation generator taking one unit vector to another.
 *
 * Overlaps within tol::reorthogonalize_cut of modulus 1 (but outside the
 * phase-only branch) re-orthogonalize phi_perp against phi once, to
 * suppress the cancellation in the difference quotient.
 */
inline RotationDecomposition rotation_hamiltonian(const StateVector& phi,
                                                  const StateVector& psi) {
  if (phi.dim() != psi.dim()) {
    throw DimensionMismatch("rotation_hamiltonian: dims " +
                            std::to_string(phi.dim()) + " vs " +
                            std::to_string(psi.dim()));
  }
  const Eigen::Index d = phi.dim();
  const Complex overlap = inner_product(phi, psi);
  const double modulus = std::abs(overlap);

  double delta = 0.0;
  if (modulus > 1e-15) {
    delta = -std::arg(overlap);
    if (delta < 0.0) {
      delta += 2.0 * M_PI;
    }
    // A phase epsilon below zero folds to 2 pi - epsilon, which rounds to
    // 2 pi itself once epsilon drops under the representable gap. Keep the
    // half-open range by mapping that back to the equivalent 0.
    if (delta >= 2.0 * M_PI) {
      delta = 0.0;
    }
  }

  if (modulus >= 1.0 - tol::parallel_cut) {
    // psi = exp(-i delta) phi: a pure phase shift, K = delta * identity.
    return RotationDecomposition{
        0.0, delta, std::nullopt,
        HermitianOperator(delta * Matrix::Identity(d, d)), phi};
  }

  const Complex phase = std::polar(1.0, delta);
  const double sin_theta = std::sqrt(1.0 - modulus * modulus);
  const double theta = std::atan2(sin_theta, modulus);

  Vector perp =
      (phase * psi.amplitudes() - modulus * phi.amplitudes()) / sin_theta;
  if (modulus > 1.0 - tol::reorthogonalize_cut) {
    perp -= phi.amplitudes().dot(perp) * phi.amplitudes();
    perp /= perp.norm();
  }
  StateVector phi_perp(std::move(perp));

  Matrix k = -Complex(0.0, theta) * phi.amplitudes() *
                 phi_perp.amplitudes().adjoint() +
             Complex(0.0, theta) * phi_perp.amplitudes() *
                 phi.amplitudes().adjoint() +
             delta * Matrix::Identity(d, d);
  return RotationDecomposition{theta, delta, std::move(phi_perp),
                               HermitianOperator(std::move(k)), phi};
}

/**
 * @brief exp(-i t K) phi along the rotation, in closed form.
 *
 * t = 0 gives phi; t = 1 gives psi. Exact to rounding, so schedules built
 * from it cost O(dim) per step instead of a matrix exponential.
 */
inline StateVector interpolating_state(const RotationDecomposition& rd,
                                       double t) {
  const Complex phase = std::polar(1.0, -t * rd.delta);
  if (!rd.phi_perp.has_value()) {
    return StateVector(phase * rd.source.amplitudes());
  }
  const double angle = t * rd.theta;
  return StateVector(phase *
                     (std::cos(angle) * rd.source.amplitudes() +
                      std::sin(angle) * rd.phi_perp->amplitudes()));
}

}  // namespace qzeno
