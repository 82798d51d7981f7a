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
#include <string>

#include "qzeno/linalg.hpp"
#include "qzeno/operators.hpp"
#include "qzeno/rng.hpp"
#include "qzeno/state.hpp"

namespace qzeno {

/**
 * @brief Haar-distributed random pure state.
 *
 * Independent standard complex Gaussian coefficients, normalized; the
 * resulting distribution is invariant under any fixed unitary.
 */
inline StateVector haar_random_state(Eigen::Index dim, Rng& rng) {
  if (dim < 1) {
    throw InvariantViolation("haar_random_state: dim must be >= 1");
  }
  Vector v(dim);
  do {
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = rng.complex_gaussian();
    }
  } while (!(v.norm() > 0.0));
  return StateVector(v / v.norm());
}

inline StateVector haar_random_state(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_state(dim, rng);
}

/// GUE-style Hermitian sample: (G + G^dagger)/2 with complex Gaussian G.
inline HermitianOperator random_hermitian(Eigen::Index dim, Rng& rng) {
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  return HermitianOperator((g + g.adjoint()) / 2.0);
}

/// Random Hermitian rescaled so its operator norm is exactly 1.
inline HermitianOperator random_hermitian_normalized(Eigen::Index dim,
                                                     Rng& rng) {
  while (true) {
    const HermitianOperator h = random_hermitian(dim, rng);
    const double norm = operator_norm(h);
    if (norm > 0.0) {
      return HermitianOperator(h.matrix() / norm);
    }
  }
}

/**
 * @brief Random rank-r projector from the first r columns of a Haar-ish
 * unitary (QR of a complex Gaussian matrix).
 */
inline Projector random_projector(Eigen::Index dim, Eigen::Index rank,
                                  Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw InvariantViolation("random_projector: rank " + std::to_string(rank) +
                             " out of range for dim " + std::to_string(dim));
  }
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  const Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix q = qr.householderQ();
  const Matrix basis = q.leftCols(rank);
  return Projector(basis * basis.adjoint());
}

/// Two random orthonormal states (Gram-Schmidt on Haar samples); dim >= 2.
inline std::pair<StateVector, StateVector> random_orthonormal_pair(
    Eigen::Index dim, Rng& rng) {
  if (dim < 2) {
    throw InvariantViolation("random_orthonormal_pair: dim must be >= 2");
  }
  const StateVector first = haar_random_state(dim, rng);
  while (true) {
    const StateVector candidate = haar_random_state(dim, rng);
    Vector residual = candidate.amplitudes() -
                      first.amplitudes().dot(candidate.amplitudes()) *
                          first.amplitudes();
    if (!(residual.norm() > 1e-6)) {
      continue;
    }
    residual -= first.amplitudes().dot(residual) * first.amplitudes();
    return {first, StateVector(residual / residual.norm())};
  }
}

}  // namespace qzeno
