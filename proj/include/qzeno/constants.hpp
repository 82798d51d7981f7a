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

namespace qzeno::tol {

// Central tolerance table. Every construction-time invariant and every
// test reads from here; nothing hard-codes its own epsilon.

/// Euclidean norm of a state vector must be 1 within this.
inline constexpr double norm = 1e-9;

/// Element-wise max modulus of A - A^dagger for Hermitian operators.
inline constexpr double hermitian = 1e-10;

/// Element-wise max modulus of U U^dagger - I for unitaries.
inline constexpr double unitary = 1e-9;

/// Element-wise max modulus of P^2 - P for projectors.
inline constexpr double idempotent = 1e-9;

/// Trace of a density matrix must be 1 within this; its smallest
/// eigenvalue must be >= -psd.
inline constexpr double trace_one = 1e-9;
inline constexpr double psd = 1e-9;

/// Projector trace must be within this of its integer rank.
inline constexpr double rank_trace = 1e-6;

/// |<phi|psi>| within this of 1 selects the phase-only rotation branch.
inline constexpr double parallel_cut = 1e-12;

/// Below 1 - this, the orthogonal complement needs no re-orthogonalization.
inline constexpr double reorthogonalize_cut = 1e-6;

/// Deficits at or below this are treated as numerical zero in slope fits.
inline constexpr double slope_floor = 1e-12;

/// |<a|b>| below this counts as orthogonal (ancilla outcome states).
inline constexpr double orthogonal = 1e-10;

}  // namespace qzeno::tol
