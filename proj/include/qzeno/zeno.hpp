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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qzeno/linalg.hpp"
#include "qzeno/operators.hpp"
#include "qzeno/rotation.hpp"
#include "qzeno/state.hpp"

namespace qzeno {

/**
 * @brief The rotating family of rank-1 measurement projectors
 * P_n = exp(-i n K / N) |phi><phi| exp(i n K / N), n = 1..N.
 *
 * Each P_n projects onto the interpolating state at t = n/N; the last one
 * targets exp(-iK) phi = psi. Frequent measurement along this family steers
 * phi into psi regardless of the drift Hamiltonian.
 */
struct ZenoSchedule {
  int steps = 0;
  std::vector<Projector> projectors;
  HermitianOperator generator;
  StateVector source;
  StateVector target;
};

inline ZenoSchedule zeno_schedule(const RotationDecomposition& rd, int steps) {
  if (steps < 1) {
    throw InvariantViolation("zeno_schedule: N must be >= 1");
  }
  std::vector<Projector> projectors;
  projectors.reserve(static_cast<std::size_t>(steps));
  for (int n = 1; n <= steps; ++n) {
    projectors.push_back(Projector::onto(
        interpolating_state(rd, static_cast<double>(n) / steps)));
  }
  StateVector target = interpolating_state(rd, 1.0);
  return ZenoSchedule{steps, std::move(projectors), rd.generator, rd.source,
                      std::move(target)};
}

/**
 * @brief Outcome of one measurement-steered evolution.
 *
 * `final_state` is the raw post-selected vector P_N U(1/N) ... P_1 U(1/N)
 * phi and is deliberately left unnormalized (norm <= 1):
 * `survival_probability` is its squared norm (the probability that every
 * projection succeeded), while `final_fidelity` = |<psi|final_state>|^2
 * folds that post-selection probability in. The two coincide here because
 * the surviving vector is exactly parallel to the last projector's range.
 *
 * `analytic_bound` = 4 (M + ||K||)^2 / N with M = ||H||; it dominates
 * -ln(final_fidelity) once N >= 2 (M + ||K||).
 */
struct ZenoRunResult {
  int steps = 0;
  Vector final_state;
  double final_fidelity = 0.0;
  double survival_probability = 0.0;
  double analytic_bound = 0.0;
  std::vector<Complex> per_step_overlaps;
  double hamiltonian_norm = 0.0;  // M
  double generator_norm = 0.0;    // ||K||
  double theta = 0.0;
  double delta = 0.0;
};

/// Smallest N for which the analytic bound is in force.
inline int bound_threshold(const ZenoRunResult& r) {
  return static_cast<int>(
      std::ceil(2.0 * (r.hamiltonian_norm + r.generator_norm)));
}

/**
 * @brief Runs the N-step steering schedule against drift Hamiltonian H.
 *
 * Between consecutive projections the state evolves freely under
 * U(1/N) = exp(-iH/N). Since every projector is rank 1, the surviving
 * vector is a scalar multiple of the current target state, and the scalar
 * is the running product of the step overlaps
 * <phi_n| U(1/N) |phi_{n-1}>, which are recorded per step.
 */
inline ZenoRunResult inverse_zeno_run(const HermitianOperator& hamiltonian,
                                      const StateVector& phi,
                                      const StateVector& psi, int steps) {
  if (hamiltonian.dim() != phi.dim() || phi.dim() != psi.dim()) {
    throw DimensionMismatch("inverse_zeno_run: dims " +
                            std::to_string(hamiltonian.dim()) + ", " +
                            std::to_string(phi.dim()) + ", " +
                            std::to_string(psi.dim()));
  }
  if (steps < 1) {
    throw InvariantViolation("inverse_zeno_run: N must be >= 1");
  }

  const RotationDecomposition rd = rotation_hamiltonian(phi, psi);
  const UnitaryMatrix step_unitary =
      matrix_exp_hermitian(hamiltonian, 1.0 / steps);

  ZenoRunResult result;
  result.steps = steps;
  result.hamiltonian_norm = operator_norm(hamiltonian);
  result.generator_norm = operator_norm(rd.generator);
  result.theta = rd.theta;
  result.delta = rd.delta;
  result.analytic_bound =
      4.0 * std::pow(result.hamiltonian_norm + result.generator_norm, 2) /
      steps;
  result.per_step_overlaps.reserve(static_cast<std::size_t>(steps));

  Complex amplitude(1.0, 0.0);
  Vector previous = rd.source.amplitudes();
  Vector current;
  for (int n = 1; n <= steps; ++n) {
    current =
        interpolating_state(rd, static_cast<double>(n) / steps).amplitudes();
    const Complex overlap = current.dot(step_unitary.matrix() * previous);
    result.per_step_overlaps.push_back(overlap);
    amplitude *= overlap;
    previous.swap(current);
  }

  result.final_state = amplitude * previous;
  result.final_fidelity = fidelity(psi, result.final_state);
  result.survival_probability = result.final_state.squaredNorm();
  return result;
}

/**
 * @brief |<phi| exp(-iH/N) exp(+iK/N) |phi>|^2.
 *
 * One interrupted step: how much one unit of the drift, chopped to length
 * 1/N and compensated by the steering generator, disturbs phi. The deficit
 * from 1 is at most 2 (M + ||K||)^2 / N^2, which is what makes N such
 * steps converge at rate 1/N overall.
 */
inline double short_time_fidelity(const HermitianOperator& hamiltonian,
                                  const HermitianOperator& generator,
                                  const StateVector& phi, int steps) {
  if (hamiltonian.dim() != generator.dim() ||
      hamiltonian.dim() != phi.dim()) {
    throw DimensionMismatch("short_time_fidelity: dims " +
                            std::to_string(hamiltonian.dim()) + ", " +
                            std::to_string(generator.dim()) + ", " +
                            std::to_string(phi.dim()));
  }
  if (steps < 1) {
    throw InvariantViolation("short_time_fidelity: N must be >= 1");
  }
  const double t = 1.0 / steps;
  const UnitaryMatrix forward = matrix_exp_hermitian(hamiltonian, t);
  const UnitaryMatrix backward = matrix_exp_hermitian(generator, -t);
  const Vector moved =
      forward.matrix() * (backward.matrix() * phi.amplitudes());
  return std::norm(phi.amplitudes().dot(moved));
}

/// Ordinary least squares on (ln x, ln y); points with y <= tol::slope_floor
/// are dropped. Needs two surviving points.
inline std::optional<double> loglog_slope(
    const std::vector<std::pair<double, double>>& points) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int kept = 0;
  for (const auto& [x, y] : points) {
    if (!(y > tol::slope_floor)) {
      continue;
    }
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++kept;
  }
  if (kept < 2) {
    return std::nullopt;
  }
  const double denom = kept * sxx - sx * sx;
  if (denom == 0.0) {
    return std::nullopt;
  }
  return (kept * sxy - sx * sy) / denom;
}

/**
 * @brief One run per N, plus the convergence-rate estimate.
 *
 * The slope is fit on (ln N, ln (1 - fidelity)) over the largest decade of
 * the sweep (N >= max(N)/10), where the asymptotic 1/N law has taken over.
 * Absent when fewer than two usable points remain. `seed` is bookkeeping
 * only; the run itself is deterministic in its inputs.
 */
struct ConvergenceSweep {
  std::vector<ZenoRunResult> runs;
  std::optional<double> deficit_slope;
  std::uint64_t seed = 0;
};

inline ConvergenceSweep convergence_sweep(const HermitianOperator& hamiltonian,
                                          const StateVector& phi,
                                          const StateVector& psi,
                                          const std::vector<int>& n_list,
                                          std::uint64_t seed) {
  if (n_list.empty()) {
    throw InvariantViolation("convergence_sweep: N list must be non-empty");
  }
  for (std::size_t i = 0; i + 1 < n_list.size(); ++i) {
    if (n_list[i] >= n_list[i + 1]) {
      throw InvariantViolation(
          "convergence_sweep: N list must be strictly increasing");
    }
  }

  ConvergenceSweep sweep;
  sweep.seed = seed;
  sweep.runs.reserve(n_list.size());
  for (int n : n_list) {
    sweep.runs.push_back(inverse_zeno_run(hamiltonian, phi, psi, n));
  }

  std::vector<std::pair<double, double>> tail;
  const double cutoff = static_cast<double>(n_list.back()) / 10.0;
  for (const ZenoRunResult& run : sweep.runs) {
    if (run.steps >= cutoff) {
      tail.emplace_back(static_cast<double>(run.steps),
                        1.0 - run.final_fidelity);
    }
  }
  sweep.deficit_slope = loglog_slope(tail);
  return sweep;
}

}  // namespace qzeno
