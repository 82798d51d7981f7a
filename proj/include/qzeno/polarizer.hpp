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
#include <numbers>
#include <string>
#include <vector>

#include "qzeno/constants.hpp"
#include "qzeno/errors.hpp"

namespace qzeno {

/**
 * @brief A sequence of ideal linear polarizers.
 *
 * `angles` are transmission axes in radians, conventionally in [0, pi);
 * `input_angle` is the incoming linear polarization. Each polarizer is a
 * rank-1 projector in the 2-dim polarization space, so transmitted
 * intensity follows Malus's law per stage. `efficiency` multiplies each
 * stage's cos^2 factor to model lossy elements; 1 keeps them ideal.
 */
struct PolarizerChain {
  std::vector<double> angles;
  double input_angle = 0.0;
  double efficiency = 1.0;
};

/**
 * @brief Ensemble intensity transmission through the whole chain:
 * efficiency * cos^2(angles[0] - input_angle), then
 * efficiency * cos^2(angles[k] - angles[k-1]) for each later stage.
 */
inline double chain_transmission(const PolarizerChain& chain) {
  if (chain.angles.empty()) {
    throw EmptyChain("chain_transmission: no polarizers in chain");
  }
  if (!(chain.efficiency > 0.0) || chain.efficiency > 1.0) {
    throw ConfigInvalid("chain_transmission: efficiency must be in (0, 1], got " +
                        std::to_string(chain.efficiency));
  }
  double transmission = 1.0;
  double previous = chain.input_angle;
  for (double angle : chain.angles) {
    const double c = std::cos(angle - previous);
    transmission *= chain.efficiency * c * c;
    previous = angle;
  }
  return transmission;
}

/**
 * @brief The staircase chain that steers polarization from 0 to pi/2:
 * N ideal polarizers at k * (pi/2) / N, k = 1..N, fed with 0-polarized
 * light. Transmission -> 1 as N grows even though the first and last axes
 * are crossed; this chain is exactly the rank-1 measurement schedule of a
 * measurement-steered rotation with H = 0 restricted to real amplitudes,
 * so its transmission equals that run's survival probability.
 */
inline PolarizerChain chain_as_zeno(int polarizer_count) {
  if (polarizer_count < 1) {
    throw EmptyChain("chain_as_zeno: need at least one polarizer");
  }
  PolarizerChain chain;
  chain.input_angle = 0.0;
  chain.angles.reserve(static_cast<std::size_t>(polarizer_count));
  for (int k = 1; k <= polarizer_count; ++k) {
    chain.angles.push_back(k * (std::numbers::pi / 2.0) / polarizer_count);
  }
  return chain;
}

}  // namespace qzeno
