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
#include <string>
#include <utility>

#include "qzeno/constants.hpp"
#include "qzeno/errors.hpp"

namespace qzeno {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/**
 * @brief A normalized pure state in a finite-dimensional Hilbert space.
 *
 * Construction rejects vectors whose Euclidean norm deviates from 1 by more
 * than tol::norm instead of silently renormalizing; a caller holding an
 * unnormalized vector goes through `normalized()` deliberately. Immutable
 * after construction.
 */
class StateVector {
 public:
  explicit StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) {
      throw InvariantViolation("StateVector: dimension must be >= 1");
    }
    const double n = amplitudes_.norm();
    if (std::abs(n - 1.0) > tol::norm) {
      throw NotNormalized("StateVector: norm is " + std::to_string(n) +
                          ", expected 1 within " + std::to_string(tol::norm));
    }
  }

  /// The k-th computational basis vector of the given dimension.
  static StateVector basis(Eigen::Index dim, Eigen::Index k) {
    if (k < 0 || k >= dim) {
      throw InvariantViolation("StateVector::basis: index out of range");
    }
    Vector v = Vector::Zero(dim);
    v(k) = Complex(1.0, 0.0);
    return StateVector(std::move(v));
  }

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator()(Eigen::Index i) const { return amplitudes_(i); }

 private:
  Vector amplitudes_;
};

/// Explicitly rescales a nonzero vector to unit norm.
inline StateVector normalized(const Vector& v) {
  const double n = v.norm();
  if (!(n > 0.0)) {
    throw InvariantViolation("normalized: zero vector has no direction");
  }
  return StateVector(v / n);
}

/// <a|b> with conjugation on the first argument.
inline Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("inner_product: dims " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
  return a.amplitudes().dot(b.amplitudes());
}

/// |<a|b>|^2 against a possibly unnormalized achieved vector.
inline double fidelity(const StateVector& target, const Vector& achieved) {
  if (target.dim() != achieved.size()) {
    throw DimensionMismatch("fidelity: dims " + std::to_string(target.dim()) +
                            " vs " + std::to_string(achieved.size()));
  }
  return std::norm(target.amplitudes().dot(achieved));
}

}  // namespace qzeno
