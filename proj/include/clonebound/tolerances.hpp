// Copyright 2026 The clonebound developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace clonebound {

/// Every numerical tolerance and size cap used by the library, in one record
/// so the test suite and the CLI agree on the same defaults.
struct Tolerances {
    double hermitian = 1e-10;         ///< max entrywise |A - A^dag|
    double eigenvalue_floor = 1e-10;  ///< eigenvalues >= -floor accepted, then clamped to 0
    double trace = 1e-9;              ///< |tr(rho) - 1|
    double unit_norm = 1e-12;         ///< pure-state norm deviation
    double kraus_completeness = 1e-9; ///< max entrywise |sum K^dag K - I|
    double gate_unitarity = 1e-10;    ///< max entrywise |U^dag U - I|
    double probability_sum = 1e-9;    ///< |sum p_j - 1|
    double feasibility = 1e-9;        ///< polytope membership slack and vertex dedup
    /// Sine distances below this count as zero. Fidelities carry ~1e-14 of
    /// roundoff and the square root lifts it to ~1e-7, so smaller computed
    /// distances between ideal outputs are indistinguishable from identity.
    double degenerate_angle = 1e-7;
    double saturation = 1e-8;         ///< |achieved R - bound| for the optimal circuit
    std::int64_t dimension_cap = std::int64_t{1} << 14; ///< largest explicit operator dimension
    int qubit_cap = 20;               ///< statevector register limit (2^20 amplitudes)
};

/// Default tolerances with the CLONEBOUND_TOL environment override applied.
/// When the variable holds a positive real, it replaces every validation
/// tolerance (hermitian, eigenvalue floor, trace, unit norm, Kraus
/// completeness, gate unitarity, probability sum, feasibility).
Tolerances tolerances_from_env();

} // namespace clonebound
