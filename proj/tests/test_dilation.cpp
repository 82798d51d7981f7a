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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "qzeno/qzeno.hpp"
#include "test_util.hpp"

using namespace qzeno;
using qzeno::testing::max_abs_diff;

namespace {

DilationSetup random_setup(Rng& rng, int system_dim, int pointer_dim,
                           double duration) {
  const Eigen::Index max_rank = std::max<Eigen::Index>(1, system_dim - 1);
  const Eigen::Index rank =
      1 + std::min<Eigen::Index>(max_rank - 1,
                                 static_cast<Eigen::Index>(rng.uniform() *
                                                           max_rank));
  return DilationSetup{random_projector(system_dim, rank, rng),
                       haar_random_state(system_dim, rng),
                       StateVector::basis(pointer_dim, 0),
                       StateVector::basis(pointer_dim, 0),
                       StateVector::basis(pointer_dim, 1),
                       duration};
}

Matrix expected_system_state(const DilationSetup& setup) {
  const Matrix rho_in = setup.system_in.amplitudes() *
                        setup.system_in.amplitudes().adjoint();
  const Matrix p = setup.projector.matrix();
  const Matrix q = setup.projector.complement().matrix();
  return p * rho_in * p + q * rho_in * q;
}

Matrix expected_pointer_state(const DilationSetup& setup) {
  const Vector passed =
      setup.projector.matrix() * setup.system_in.amplitudes();
  const Vector blocked = setup.system_in.amplitudes() - passed;
  return passed.squaredNorm() * setup.pointer_pass.amplitudes() *
             setup.pointer_pass.amplitudes().adjoint() +
         blocked.squaredNorm() * setup.pointer_block.amplitudes() *
             setup.pointer_block.amplitudes().adjoint();
}

}  // namespace

TEST_CASE("a full-pass projector leaves the system alone") {
  Rng rng(41);
  const StateVector phi = haar_random_state(3, rng);
  Vector mixed_ready(2);
  mixed_ready << Complex(1.0, 0.0), Complex(1.0, 0.0);
  const DilationSetup setup{Projector::identity(3),
                            phi,
                            normalized(mixed_ready),
                            StateVector::basis(2, 0),
                            StateVector::basis(2, 1),
                            1.0};
  const DilationResult result = build_dilation(setup);

  const Vector expected_joint = Eigen::kroneckerProduct(
      phi.amplitudes(), StateVector::basis(2, 0).amplitudes());
  REQUIRE((result.joint_out.amplitudes() - expected_joint).norm() < 1e-8);
  REQUIRE(max_abs_diff(result.rho_ancilla.matrix(),
                       StateVector::basis(2, 0).amplitudes() *
                           StateVector::basis(2, 0).amplitudes().adjoint()) <
          1e-9);
  REQUIRE(decoherence_check(result, setup.projector) == 0.0);
  REQUIRE(std::abs(result.pass_probability - 1.0) < 1e-12);
}

TEST_CASE("a balanced superposition splits the pointer evenly") {
  Vector plus_raw(2);
  plus_raw << Complex(1.0, 0.0), Complex(1.0, 0.0);
  const DilationSetup setup{Projector::onto(StateVector::basis(2, 0)),
                            normalized(plus_raw),
                            StateVector::basis(2, 0),
                            StateVector::basis(2, 0),
                            StateVector::basis(2, 1),
                            1.0};
  const DilationResult result = build_dilation(setup);

  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = Complex(0.5, 0.0);
  expected(1, 1) = Complex(0.5, 0.0);
  REQUIRE(max_abs_diff(result.rho_ancilla.matrix(), expected) < 1e-9);
  REQUIRE(std::abs(result.rho_system.purity() - 0.5) < 1e-9);
  REQUIRE(std::abs(result.pass_probability - 0.5) < 1e-12);
}

TEST_CASE("the joint rotation is reproduced by an independent exponential") {
  Rng rng(42);
  const DilationSetup setup = random_setup(rng, 3, 2, 0.37);
  const DilationResult result = build_dilation(setup);

  const StateVector joint_in =
      tensor_product(setup.system_in, setup.pointer_ready);
  const Vector evolved =
      oracle::pade_propagator(result.coupling.matrix(), result.duration) *
      joint_in.amplitudes();
  REQUIRE(std::abs(evolved.norm() - 1.0) < 1e-9);
  REQUIRE((evolved - result.joint_out.amplitudes()).norm() < 1e-8);
}

TEST_CASE("the reduced system state is the sandwiched mixture") {
  Rng rng(43);
  const DilationSetup setup = random_setup(rng, 3, 2, 0.37);
  const DilationResult result = build_dilation(setup);

  REQUIRE(max_abs_diff(result.rho_system.matrix(),
                       expected_system_state(setup)) < 1e-9);
  REQUIRE(decoherence_check(result, setup.projector) < 1e-9);

  // Contrast: before the measurement the coherence block is alive.
  Vector plus_raw(2);
  plus_raw << Complex(1.0, 0.0), Complex(1.0, 0.0);
  const StateVector plus = normalized(plus_raw);
  const Projector p0 = Projector::onto(StateVector::basis(2, 0));
  const Matrix rho_pure = plus.amplitudes() * plus.amplitudes().adjoint();
  const double live_coherence =
      (p0.matrix() * rho_pure * p0.complement().matrix()).norm();
  REQUIRE(std::abs(live_coherence - 0.5) < 1e-12);
}

TEST_CASE("probability, purity, and weights stay consistent") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const DilationSetup setup = random_setup(rng, 4, 3, 1.0);
    const DilationResult result = build_dilation(setup);
    const double p = result.pass_probability;

    const double born_weight =
        (setup.projector.matrix() * result.rho_system.matrix())
            .trace()
            .real();
    REQUIRE(std::abs(born_weight - p) < 1e-10);
    REQUIRE(std::abs(result.rho_system.purity() -
                     (p * p + (1.0 - p) * (1.0 - p))) < 1e-9);
    REQUIRE(max_abs_diff(result.rho_ancilla.matrix(),
                         expected_pointer_state(setup)) < 1e-9);
  }
}

TEST_CASE("results do not depend on the interaction duration") {
  Rng rng(45);
  DilationSetup setup = random_setup(rng, 3, 2, 1.0);

  setup.duration = 0.1;
  const DilationResult fast = build_dilation(setup);
  setup.duration = 1.0;
  const DilationResult unit = build_dilation(setup);
  setup.duration = 10.0;
  const DilationResult slow = build_dilation(setup);

  REQUIRE(max_abs_diff(fast.joint_out.amplitudes(),
                       slow.joint_out.amplitudes()) < 1e-12);
  REQUIRE(max_abs_diff(fast.rho_system.matrix(), slow.rho_system.matrix()) <
          1e-12);
  // The coupling absorbs the duration as 1/s.
  REQUIRE(std::abs(operator_norm(fast.coupling) -
                   10.0 * operator_norm(unit.coupling)) < 1e-9);
  REQUIRE(std::abs(operator_norm(slow.coupling) -
                   0.1 * operator_norm(unit.coupling)) < 1e-10);
}

TEST_CASE("random setups satisfy every dilation invariant") {
  int checked = 0;
  for (int system_dim : {2, 3, 4}) {
    for (int pointer_dim : {2, 3}) {
      for (double duration : {0.1, 1.0, 10.0}) {
        Rng rng(Rng::substream_seed(
            600, static_cast<std::uint64_t>(checked + 1)));
        for (int trial = 0; trial < 4; ++trial) {
          const DilationSetup setup =
              random_setup(rng, system_dim, pointer_dim, duration);
          const DilationResult result = build_dilation(setup);

          const StateVector joint_in =
              tensor_product(setup.system_in, setup.pointer_ready);
          const Vector evolved =
              matrix_exp_hermitian(result.coupling, result.duration).matrix() *
              joint_in.amplitudes();
          REQUIRE((evolved - result.joint_out.amplitudes()).norm() < 1e-8);
          REQUIRE(max_abs_diff(result.rho_system.matrix(),
                               expected_system_state(setup)) < 1e-9);
          REQUIRE(max_abs_diff(result.rho_ancilla.matrix(),
                               expected_pointer_state(setup)) < 1e-9);
          REQUIRE(decoherence_check(result, setup.projector) < 1e-9);
          ++checked;
        }
      }
    }
  }
  REQUIRE(checked == 72);
}

TEST_CASE("dilation rejects malformed setups") {
  Rng rng(46);
  const StateVector phi = haar_random_state(2, rng);

  DilationSetup bad_duration{Projector::identity(2), phi,
                             StateVector::basis(2, 0),
                             StateVector::basis(2, 0),
                             StateVector::basis(2, 1), 0.0};
  REQUIRE_THROWS_AS(build_dilation(bad_duration), NonPositiveDuration);

  DilationSetup bad_dim{Projector::identity(3), phi,
                        StateVector::basis(2, 0), StateVector::basis(2, 0),
                        StateVector::basis(2, 1), 1.0};
  REQUIRE_THROWS_AS(build_dilation(bad_dim), DimensionMismatch);

  DilationSetup bad_pointers{Projector::identity(2), phi,
                             StateVector::basis(2, 0),
                             StateVector::basis(2, 0),
                             StateVector::basis(3, 1), 1.0};
  REQUIRE_THROWS_AS(build_dilation(bad_pointers), DimensionMismatch);

  DilationSetup overlapping{Projector::identity(2), phi,
                            StateVector::basis(2, 0),
                            StateVector::basis(2, 0),
                            StateVector::basis(2, 0), 1.0};
  REQUIRE_THROWS_AS(build_dilation(overlapping), AncillaNotOrthogonal);

  Vector scalar(1);
  scalar << Complex(1.0, 0.0);
  DilationSetup tiny_pointer{Projector::identity(2), phi,
                             StateVector(scalar), StateVector(scalar),
                             StateVector(scalar), 1.0};
  REQUIRE_THROWS_AS(build_dilation(tiny_pointer), DimensionMismatch);

  const DilationResult ok = build_dilation(DilationSetup{
      Projector::identity(2), phi, StateVector::basis(2, 0),
      StateVector::basis(2, 0), StateVector::basis(2, 1), 1.0});
  REQUIRE_THROWS_AS(decoherence_check(ok, Projector::identity(3)),
                    DimensionMismatch);
}

TEST_CASE("a chain of dilations reproduces the steered run") {
  const StateVector e0 = StateVector::basis(2, 0);
  const StateVector e1 = StateVector::basis(2, 1);
  const HermitianOperator h = pauli_x();
  const RotationDecomposition rd = rotation_hamiltonian(e0, e1);

  // Pointer basis: pass, block, plus one spectator level that must stay
  // empty throughout.
  const StateVector ready = StateVector::basis(3, 0);
  const StateVector pass = StateVector::basis(3, 0);
  const StateVector block = StateVector::basis(3, 1);

  for (int steps = 1; steps <= 4; ++steps) {
    const ZenoRunResult reference = inverse_zeno_run(h, e0, e1, steps);
    const ZenoSchedule schedule = zeno_schedule(rd, steps);
    const UnitaryMatrix drift = matrix_exp_hermitian(h, 1.0 / steps);

    Vector system = e0.amplitudes();
    double kept_probability = 1.0;
    for (int n = 1; n <= steps; ++n) {
      system = drift.matrix() * system;
      const DilationSetup setup{
          schedule.projectors[static_cast<std::size_t>(n - 1)],
          StateVector(system), ready, pass, block, 1.0};
      const DilationResult result = build_dilation(setup);

      // Read the pointer: slot j of pointer space at joint index i*3+j.
      Vector kept(2);
      double spectator_weight = 0.0;
      for (Eigen::Index i = 0; i < 2; ++i) {
        kept(i) = result.joint_out(i * 3 + 0);
        spectator_weight += std::norm(result.joint_out(i * 3 + 2));
      }
      REQUIRE(std::sqrt(spectator_weight) < 1e-10);

      const double p_pass = kept.squaredNorm();
      REQUIRE(std::abs(p_pass - result.pass_probability) < 1e-9);
      REQUIRE(p_pass > 0.0);
      kept_probability *= p_pass;
      system = kept / std::sqrt(p_pass);
    }

    REQUIRE(std::abs(kept_probability - reference.survival_probability) <
            1e-7);
    const Vector reference_conditional =
        reference.final_state / reference.final_state.norm();
    REQUIRE((system - reference_conditional).norm() < 1e-7);
  }
}
