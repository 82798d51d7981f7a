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

#include "qzeno/constants.hpp"
#include "qzeno/errors.hpp"
#include "qzeno/state.hpp"

namespace qzeno {

namespace detail {

inline void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw InvariantViolation(std::string(who) + ": matrix must be square");
  }
}

inline double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace detail

/**
 * @brief A complex Hermitian matrix (energy units, hbar = 1).
 *
 * Hermiticity is checked element-wise at construction within tol::hermitian.
 */
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
    detail::require_square(entries_, "HermitianOperator");
    const double defect = detail::hermiticity_defect(entries_);
    if (defect > tol::hermitian) {
      throw NotHermitian("HermitianOperator: max |A - A^dagger| = " +
                         std::to_string(defect));
    }
  }

  static HermitianOperator zero(Eigen::Index dim) {
    return HermitianOperator(Matrix::Zero(dim, dim));
  }

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

 private:
  Matrix entries_;
};

/// U with U U^dagger = I within tol::unitary, checked at construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix entries) : entries_(std::move(entries)) {
    detail::require_square(entries_, "UnitaryMatrix");
    const Eigen::Index d = entries_.rows();
    const double defect =
        (entries_ * entries_.adjoint() - Matrix::Identity(d, d))
            .cwiseAbs()
            .maxCoeff();
    if (defect > tol::unitary) {
      throw InvariantViolation("UnitaryMatrix: max |U U^dagger - I| = " +
                               std::to_string(defect));
    }
  }

  static UnitaryMatrix identity(Eigen::Index dim) {
    return UnitaryMatrix(Matrix::Identity(dim, dim));
  }

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  /// Applies the unitary to raw amplitudes.
  Vector apply(const Vector& v) const {
    if (v.size() != dim()) {
      throw DimensionMismatch("UnitaryMatrix::apply: dims " +
                              std::to_string(dim()) + " vs " +
                              std::to_string(v.size()));
    }
    return entries_ * v;
  }

  StateVector apply(const StateVector& s) const {
    return StateVector(apply(s.amplitudes()));
  }

 private:
  Matrix entries_;
};

/**
 * @brief Hermitian idempotent operator; rank is recovered from the trace.
 */
class Projector {
 public:
  explicit Projector(Matrix entries) : entries_(std::move(entries)) {
    detail::require_square(entries_, "Projector");
    const double herm = detail::hermiticity_defect(entries_);
    if (herm > tol::hermitian) {
      throw NotHermitian("Projector: max |P - P^dagger| = " +
                         std::to_string(herm));
    }
    const double idem =
        (entries_ * entries_ - entries_).cwiseAbs().maxCoeff();
    if (idem > tol::idempotent) {
      throw InvariantViolation("Projector: max |P^2 - P| = " +
                               std::to_string(idem));
    }
    const double trace = entries_.trace().real();
    rank_ = static_cast<Eigen::Index>(std::lround(trace));
    if (rank_ < 0 || std::abs(trace - static_cast<double>(rank_)) >
                         tol::rank_trace) {
      throw InvariantViolation("Projector: trace " + std::to_string(trace) +
                               " is not within " +
                               std::to_string(tol::rank_trace) +
                               " of an integer rank");
    }
  }

  /// Rank-1 projector |s><s| onto a pure state.
  static Projector onto(const StateVector& s) {
    return Projector(s.amplitudes() * s.amplitudes().adjoint());
  }

  static Projector identity(Eigen::Index dim) {
    return Projector(Matrix::Identity(dim, dim));
  }

  Eigen::Index dim() const { return entries_.rows(); }
  Eigen::Index rank() const { return rank_; }
  const Matrix& matrix() const { return entries_; }

  /// The complementary projector 1 - P.
  Projector complement() const {
    return Projector(Matrix::Identity(dim(), dim()) - entries_);
  }

  Vector apply(const Vector& v) const {
    if (v.size() != dim()) {
      throw DimensionMismatch("Projector::apply: dims " +
                              std::to_string(dim()) + " vs " +
                              std::to_string(v.size()));
    }
    return entries_ * v;
  }

 private:
  Matrix entries_;
  Eigen::Index rank_ = 0;
};

/**
 * @brief Positive semidefinite unit-trace operator (a mixed state).
 *
 * PSD is checked through the smallest eigenvalue, which may dip to -tol::psd
 * from rounding.
 */
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    detail::require_square(entries_, "DensityMatrix");
    const double herm = detail::hermiticity_defect(entries_);
    if (herm > tol::hermitian) {
      throw NotHermitian("DensityMatrix: max |rho - rho^dagger| = " +
                         std::to_string(herm));
    }
    const double trace = entries_.trace().real();
    if (std::abs(trace - 1.0) > tol::trace_one) {
      throw InvariantViolation("DensityMatrix: trace is " +
                               std::to_string(trace));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_,
                                                 Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol::psd) {
      throw InvariantViolation("DensityMatrix: smallest eigenvalue " +
                               std::to_string(min_eig));
    }
  }

  /// The pure state |s><s|.
  static DensityMatrix pure(const StateVector& s) {
    return DensityMatrix(s.amplitudes() * s.amplitudes().adjoint());
  }

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  /// tr(rho^2); 1 for pure states, 1/dim for the maximally mixed state.
  double purity() const { return (entries_ * entries_).trace().real(); }

 private:
  Matrix entries_;
};

/// Pauli matrices, the standard 2-dim Hermitian basis (with identity).
inline HermitianOperator pauli_x() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  return HermitianOperator(m);
}

inline HermitianOperator pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return HermitianOperator(m);
}

inline HermitianOperator pauli_z() {
  Matrix m(2, 2);
  m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return HermitianOperator(m);
}

}  // namespace qzeno
