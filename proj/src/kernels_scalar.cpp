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

#include <limits>

namespace clonebound::kernels::scalar {

void apply_single_qubit(Complex* amps, std::size_t n, int target,
                        const Complex* u) {
    const std::size_t mask = std::size_t{1} << target;
    // Index pairs (i, i | mask): iterate the blocks below and above the
    // target bit.
    for (std::size_t base = 0; base < n; base += 2 * mask) {
        for (std::size_t low = 0; low < mask; ++low) {
            const std::size_t i0 = base + low;
            const std::size_t i1 = i0 | mask;
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i1];
            amps[i0] = u[0] * a0 + u[1] * a1;
            amps[i1] = u[2] * a0 + u[3] * a1;
        }
    }
}

void apply_two_qubit(Complex* amps, std::size_t n, int target_a, int target_b,
                     const Complex* u) {
    const std::size_t bit_a = std::size_t{1} << target_a;
    const std::size_t bit_b = std::size_t{1} << target_b;
    const int lo = target_a < target_b ? target_a : target_b;
    const int hi = target_a < target_b ? target_b : target_a;
    const std::size_t lo_mask = (std::size_t{1} << lo) - 1;
    const std::size_t mid_mask = (std::size_t{1} << (hi - 1)) - 1 - lo_mask;

    for (std::size_t i = 0; i < n / 4; ++i) {
        // Spread i over the index space with zeros at both target bits.
        const std::size_t base = (i & lo_mask) | ((i & mid_mask) << 1) |
                                 ((i & ~(lo_mask | mid_mask)) << 2);
        const std::size_t idx[4] = {base, base | bit_b, base | bit_a,
                                    base | bit_a | bit_b};
        const Complex a[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]],
                              amps[idx[3]]};
        for (int g = 0; g < 4; ++g) {
            amps[idx[g]] = u[4 * g + 0] * a[0] + u[4 * g + 1] * a[1] +
                           u[4 * g + 2] * a[2] + u[4 * g + 3] * a[3];
        }
    }
}

double min_affine_pair(const double* a, const double* b, double wa, double wb,
                       std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double v = wa * a[i] + wb * b[i];
        if (v < best)
            best = v;
    }
    return best;
}

} // namespace clonebound::kernels::scalar
