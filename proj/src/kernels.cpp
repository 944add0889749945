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

#include "clonebound/kernels.hpp"

namespace clonebound::kernels {

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {
const bool use_avx2 = avx2_compiled() && cpu_supports_avx2();
}

const char* active_backend() { return use_avx2 ? "avx2" : "scalar"; }

void apply_single_qubit(Complex* amps, std::size_t n, int target,
                        const Complex* u) {
    if (use_avx2)
        avx2::apply_single_qubit(amps, n, target, u);
    else
        scalar::apply_single_qubit(amps, n, target, u);
}

void apply_two_qubit(Complex* amps, std::size_t n, int target_a, int target_b,
                     const Complex* u) {
    if (use_avx2)
        avx2::apply_two_qubit(amps, n, target_a, target_b, u);
    else
        scalar::apply_two_qubit(amps, n, target_a, target_b, u);
}

double min_affine_pair(const double* a, const double* b, double wa, double wb,
                       std::size_t n) {
    return use_avx2 ? avx2::min_affine_pair(a, b, wa, wb, n)
                    : scalar::min_affine_pair(a, b, wa, wb, n);
}

} // namespace clonebound::kernels
