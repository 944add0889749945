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

#include <complex>
#include <cstddef>

// Data-parallel inner loops of the project: dense gate application on a
// packed statevector and the min-reductions behind the grid oracles.
// Each kernel exists as a scalar reference and an AVX2 variant; the
// top-level entry points pick one at runtime. Results of the two variants
// agree up to floating-point reassociation (equivalence-tested).

namespace clonebound::kernels {

using Complex = std::complex<double>;

/// True when the running CPU reports AVX2 support.
bool cpu_supports_avx2();

/// True when the AVX2 translation unit was compiled into this build.
bool avx2_compiled();

/// "avx2" or "scalar": the variant the dispatched entry points will use.
const char* active_backend();

// Dispatched entry points -----------------------------------------------

/// amps has n = 2^k amplitudes; bit `target` of an amplitude index selects
/// the qubit. u is 2x2 row-major.
void apply_single_qubit(Complex* amps, std::size_t n, int target,
                        const Complex* u);

/// u is 4x4 row-major in the basis |b_a b_b> with index 2*b_a + b_b,
/// b_a the bit at `target_a`. Targets must be distinct.
void apply_two_qubit(Complex* amps, std::size_t n, int target_a, int target_b,
                     const Complex* u);

/// min over i of wa*a[i] + wb*b[i]; n may be zero (returns +inf).
double min_affine_pair(const double* a, const double* b, double wa, double wb,
                       std::size_t n);

// Scalar reference kernels ----------------------------------------------

namespace scalar {
void apply_single_qubit(Complex* amps, std::size_t n, int target,
                        const Complex* u);
void apply_two_qubit(Complex* amps, std::size_t n, int target_a, int target_b,
                     const Complex* u);
double min_affine_pair(const double* a, const double* b, double wa, double wb,
                       std::size_t n);
} // namespace scalar

// AVX2 kernels (forward to scalar when the build lacks AVX2) -------------

namespace avx2 {
void apply_single_qubit(Complex* amps, std::size_t n, int target,
                        const Complex* u);
void apply_two_qubit(Complex* amps, std::size_t n, int target_a, int target_b,
                     const Complex* u);
double min_affine_pair(const double* a, const double* b, double wa, double wb,
                       std::size_t n);
} // namespace avx2

} // namespace clonebound::kernels
