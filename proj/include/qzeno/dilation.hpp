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
#include <string>
#include <utility>

#include "qzeno/linalg.hpp"
#include "qzeno/operators.hpp"
#include "qzeno/rotation.hpp"
#include "qzeno/state.hpp"

namespace qzeno {

/**
 * @brief Ingredients for modelling one projective measurement as a unitary.
 *
 * The system carries the measured projector P and input state phi; the
 * pointer (ancilla) starts in `pointer_ready` and is driven to
 * `pointer_pass` on the P outcome or `pointer_block` on the complement.
 * Only pass/block must be mutually orthogonal; the ready state is free.
 * `duration` is the interaction time s; the coupling strength scales as
 * 1/s, so any positive value yields the same final states.
 */
struct DilationSetup {
  Projector projector;
  StateVector system_in;
  StateVector pointer_ready;
  StateVector pointer_pass;
  StateVector pointer_block;
  double duration = 1.0;
};

/**
 * @brief The dilation: one Hermitian coupling whose unitary, run for
 * `duration`, entangles the pointer with the measurement outcome.
 *
 * joint_out = exp(-is L)(phi (x) ready) = P phi (x) pass
 *                                         + (1-P) phi (x) block.
 * Tracing out the pointer leaves rho_system = P rho P + (1-P) rho (1-P),
 * the textbook post-measurement mixture: the sandwiched off-diagonal
 * blocks are gone even though the joint dynamics stayed unitary.
 */
struct DilationResult {
  HermitianOperator coupling;  // L, with ||L|| <= (theta + delta) / s
  StateVector joint_out;
  DensityMatrix rho_system;
  DensityMatrix rho_ancilla;
  double duration = 1.0;
  double pass_probability = 0.0;  // ||P phi||^2
};

namespace detail {

/// Kronecker product of raw coefficient vectors, system factor first.
inline Vector kron_vector(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

}  // namespace detail

inline DilationResult build_dilation(const DilationSetup& setup) {
  if (!(setup.duration > 0.0)) {
    throw NonPositiveDuration("build_dilation: duration must be > 0, got " +
                              std::to_string(setup.duration));
  }
  if (setup.projector.dim() != setup.system_in.dim()) {
    throw DimensionMismatch("build_dilation: projector dim " +
                            std::to_string(setup.projector.dim()) +
                            " vs system dim " +
                            std::to_string(setup.system_in.dim()));
  }
  const Eigen::Index pointer_dim = setup.pointer_ready.dim();
  if (setup.pointer_pass.dim() != pointer_dim ||
      setup.pointer_block.dim() != pointer_dim) {
    throw DimensionMismatch("build_dilation: pointer states differ in dim");
  }
  if (pointer_dim < 2) {
    throw DimensionMismatch("build_dilation: pointer dim must be >= 2");
  }
  const double pass_block_overlap =
      std::abs(inner_product(setup.pointer_pass, setup.pointer_block));
  if (pass_block_overlap > tol::orthogonal) {
    throw AncillaNotOrthogonal(
        "build_dilation: pass/block pointer overlap " +
        std::to_string(pass_block_overlap));
  }

  const Vector passed = setup.projector.matrix() * setup.system_in.amplitudes();
  const Vector blocked = setup.system_in.amplitudes() - passed;
  Vector target_raw =
      detail::kron_vector(passed, setup.pointer_pass.amplitudes()) +
      detail::kron_vector(blocked, setup.pointer_block.amplitudes());
  if (std::abs(target_raw.norm() - 1.0) > tol::norm) {
    throw InvariantViolation("build_dilation: outcome superposition norm " +
                             std::to_string(target_raw.norm()));
  }

  const StateVector joint_in =
      tensor_product(setup.system_in, setup.pointer_ready);
  const StateVector target(std::move(target_raw));
  const RotationDecomposition rd = rotation_hamiltonian(joint_in, target);

  HermitianOperator coupling(rd.generator.matrix() / setup.duration);
  StateVector joint_out = interpolating_state(rd, 1.0);
  const DensityMatrix joint_density = DensityMatrix::pure(joint_out);
  DensityMatrix rho_system = partial_trace(joint_density, setup.system_in.dim(),
                                           pointer_dim, Factor::left);
  DensityMatrix rho_ancilla = partial_trace(
      joint_density, setup.system_in.dim(), pointer_dim, Factor::right);
  return DilationResult{std::move(coupling),   std::move(joint_out),
                        std::move(rho_system), std::move(rho_ancilla),
                        setup.duration,        passed.squaredNorm()};
}

/**
 * @brief Frobenius norm of P rho_system (1-P), the coherence block the
 * measurement is supposed to kill. Valid dilations give < 1e-9.
 */
inline double decoherence_check(const DilationResult& result,
                                const Projector& projector) {
  if (projector.dim() != result.rho_system.dim()) {
    throw DimensionMismatch("decoherence_check: projector dim " +
                            std::to_string(projector.dim()) +
                            " vs system dim " +
                            std::to_string(result.rho_system.dim()));
  }
  return (projector.matrix() * result.rho_system.matrix() *
          projector.complement().matrix())
      .norm();
}

}  // namespace qzeno
