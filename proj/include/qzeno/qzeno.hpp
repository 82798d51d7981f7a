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

// Umbrella header: the whole library in dependency order.

#pragma once

#include "qzeno/constants.hpp"   // IWYU pragma: export
#include "qzeno/errors.hpp"      // IWYU pragma: export
#include "qzeno/rng.hpp"         // IWYU pragma: export
#include "qzeno/state.hpp"       // IWYU pragma: export
#include "qzeno/operators.hpp"   // IWYU pragma: export
#include "qzeno/linalg.hpp"      // IWYU pragma: export
#include "qzeno/random.hpp"      // IWYU pragma: export
#include "qzeno/rotation.hpp"    // IWYU pragma: export
#include "qzeno/zeno.hpp"        // IWYU pragma: export
#include "qzeno/dilation.hpp"    // IWYU pragma: export
#include "qzeno/polarizer.hpp"   // IWYU pragma: export
#include "qzeno/two_level.hpp"   // IWYU pragma: export
