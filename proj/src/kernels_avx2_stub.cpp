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

// Fallback when the toolchain or architecture cannot build the AVX2
// translation unit: the avx2 entry points forward to the scalar kernels
// and avx2_compiled() reports false, so dispatch never selects them.

#include "clonebound/kernels.hpp"

namespace clonebound::kernels::avx2 {

void apply_single_qubit(Complex* amps, std::size_t n, int target,
                        const Complex* u) {
    scalar::apply_single_qubit(amps, n, target, u);
}

void apply_two_qubit(Complex* amps, std::size_t n, int target_a, int target_b,
                     const Complex* u) {
    scalar::apply_two_qubit(amps, n, target_a, target_b, u);
}

double min_affine_pair(const double* a, const double* b, double wa, double wb,
                       std::size_t n) {
    return scalar::min_affine_pair(a, b, wa, wb, n);
}

} // namespace clonebound::kernels::avx2

namespace clonebound::kernels {
bool avx2_compiled() { return false; }
} // namespace clonebound::kernels
