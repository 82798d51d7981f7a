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
#include <complex>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "qzeno/operators.hpp"
#include "qzeno/state.hpp"

namespace qzeno {

/**
 * @brief exp(-i t A) for Hermitian A, via full eigendecomposition.
 *
 * A = V diag(lambda) V^dagger gives exp(-itA) = V diag(exp(-it lambda))
 * V^dagger, so the result is unitary up to the eigensolver residual. Every
 * generator in this library is Hermitian and small, which makes this the
 * right tradeoff against Pade or scaled-squaring schemes.
 */
inline UnitaryMatrix matrix_exp_hermitian(const HermitianOperator& a,
                                          double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw InvariantViolation("matrix_exp_hermitian: eigensolver failed");
  }
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  Vector phases(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    phases(i) = std::polar(1.0, -t * eigenvalues(i));
  }
  const Matrix& v = solver.eigenvectors();
  return UnitaryMatrix(v * phases.asDiagonal() * v.adjoint());
}

/// Largest |eigenvalue|; for Hermitian operators this is the operator norm.
inline double operator_norm(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvariantViolation("operator_norm: eigensolver failed");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// Tensor products use the convention (i, j) -> i * dim_right + j: the left
// factor is the slow index, matching the ordinary Kronecker product.

inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

inline StateVector tensor_product(const StateVector& a, const StateVector& b) {
  Vector out(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    out.segment(i * b.dim(), b.dim()) = a(i) * b.amplitudes();
  }
  return StateVector(std::move(out));
}

inline HermitianOperator tensor_product(const HermitianOperator& a,
                                        const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

inline UnitaryMatrix tensor_product(const UnitaryMatrix& a,
                                    const UnitaryMatrix& b) {
  return UnitaryMatrix(kron(a.matrix(), b.matrix()));
}

inline Projector tensor_product(const Projector& a, const Projector& b) {
  return Projector(kron(a.matrix(), b.matrix()));
}

inline DensityMatrix tensor_product(const DensityMatrix& a,
                                    const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

/// Which tensor factor a partial trace keeps.
enum class Factor { left, right };

/**
 * @brief Reduced density matrix of one factor of a bipartite state.
 *
 * `rho` lives on a space of dimension dim_left * dim_right with the left
 * factor slow. Trace-preserving and positivity-preserving.
 */
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   Eigen::Index dim_left,
                                   Eigen::Index dim_right, Factor keep) {
  if (dim_left < 1 || dim_right < 1 ||
      rho.dim() != dim_left * dim_right) {
    throw DimensionMismatch(
        "partial_trace: rho has dim " + std::to_string(rho.dim()) +
        ", expected " + std::to_string(dim_left) + " * " +
        std::to_string(dim_right));
  }
  const Matrix& m = rho.matrix();
  if (keep == Factor::left) {
    Matrix out = Matrix::Zero(dim_left, dim_left);
    for (Eigen::Index i = 0; i < dim_left; ++i) {
      for (Eigen::Index j = 0; j < dim_left; ++j) {
        Complex sum = 0.0;
        for (Eigen::Index k = 0; k < dim_right; ++k) {
          sum += m(i * dim_right + k, j * dim_right + k);
        }
        out(i, j) = sum;
      }
    }
    return DensityMatrix(std::move(out));
  }
  Matrix out = Matrix::Zero(dim_right, dim_right);
  for (Eigen::Index i = 0; i < dim_right; ++i) {
    for (Eigen::Index j = 0; j < dim_right; ++j) {
      Complex sum = 0.0;
      for (Eigen::Index k = 0; k < dim_left; ++k) {
        sum += m(k * dim_right + i, k * dim_right + j);
      }
      out(i, j) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

}  // namespace qzeno
