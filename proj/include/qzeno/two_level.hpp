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

#include <cmath>
#include <complex>
#include <string>

#include "qzeno/linalg.hpp"
#include "qzeno/operators.hpp"
#include "qzeno/state.hpp"
#include "qzeno/zeno.hpp"

namespace qzeno {

/**
 * @brief A two-level system tunnelling between a source and a target
 * configuration at angular frequency lambda, so the free transfer
 * probability is sin^2(lambda t).
 *
 * The labels are bookkeeping tags for reports. lambda = 0 freezes the
 * free dynamics, which isolates the measurement back-action; lambda must
 * not be negative.
 */
struct TwoLevelDecayModel {
  double lambda = 1.0;
  Complex alpha0{1.0, 0.0};  // source amplitude
  Complex beta0{0.0, 0.0};   // target amplitude
  std::string source_label = "source";
  std::string target_label = "target";
};

namespace detail {

inline void validate_two_level(const TwoLevelDecayModel& model,
                               const char* operation) {
  if (model.lambda < 0.0) {
    throw ConfigInvalid(std::string(operation) +
                        ": lambda must be nonnegative, got " +
                        std::to_string(model.lambda));
  }
  const double total = std::norm(model.alpha0) + std::norm(model.beta0);
  if (std::abs(total - 1.0) > tol::norm) {
    throw NotNormalized(std::string(operation) +
                        ": |alpha0|^2 + |beta0|^2 = " + std::to_string(total));
  }
}

inline HermitianOperator tunneling_hamiltonian(double lambda) {
  return HermitianOperator(lambda * pauli_x().matrix());
}

}  // namespace detail

/**
 * @brief Probability that the system is found undecayed every time when
 * measured in the source/target basis N times at spacing T/N.
 *
 * Evolution over each interval is exp(-i lambda (T/N) sigma_x); each
 * measurement keeps the source outcome and restarts from it. From the
 * default source start this equals cos^{2N}(lambda T / N), which rises
 * toward 1 with N: frequent watching freezes the decay.
 */
inline double survival_under_repeated_measurement(
    const TwoLevelDecayModel& model, double total_time, int measurements) {
  detail::validate_two_level(model, "survival_under_repeated_measurement");
  if (!(total_time > 0.0)) {
    throw NonPositiveDuration(
        "survival_under_repeated_measurement: total time must be > 0, got " +
        std::to_string(total_time));
  }
  if (measurements < 1) {
    throw InvariantViolation(
        "survival_under_repeated_measurement: N must be >= 1");
  }

  const UnitaryMatrix step = matrix_exp_hermitian(
      detail::tunneling_hamiltonian(model.lambda), total_time / measurements);
  Vector state(2);
  state << model.alpha0, model.beta0;
  double survival = 1.0;
  for (int n = 0; n < measurements; ++n) {
    const Vector evolved = step.matrix() * state;
    survival *= std::norm(evolved(0));
    if (survival == 0.0) {
      break;
    }
    state << Complex(1.0, 0.0), Complex(0.0, 0.0);
  }
  return survival;
}

/**
 * @brief Transfer probability into the target state when the N
 * measurements instead follow the rotating schedule from source to
 * target under the same tunneling Hamiltonian.
 *
 * Returns the run's fidelity |<target|psi_N>|^2 with the post-selection
 * probability folded in. Approaches 1 as N grows: the same measurement
 * resource that froze the decay above completes it when aimed along the
 * rotating family.
 */
inline double steered_mutation_probability(const TwoLevelDecayModel& model,
                                           int measurements) {
  detail::validate_two_level(model, "steered_mutation_probability");
  if (measurements < 1) {
    throw InvariantViolation("steered_mutation_probability: N must be >= 1");
  }
  const StateVector source = StateVector::basis(2, 0);
  const StateVector target = StateVector::basis(2, 1);
  const ZenoRunResult run =
      inverse_zeno_run(detail::tunneling_hamiltonian(model.lambda), source,
                       target, measurements);
  return run.final_fidelity;
}

}  // namespace qzeno
