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

// AVX2 + FMA kernels. Amplitudes are packed std::complex<double>, i.e.
// [re, im] pairs, two complex values per __m256d lane group.

#include "clonebound/kernels.hpp"

#include <immintrin.h>

#include <limits>

namespace clonebound::kernels::avx2 {

namespace {

// Elementwise product of two packed-complex vectors x, y = [r0,i0,r1,i1].
inline __m256d cmul(__m256d x, __m256d y) {
    const __m256d x_re = _mm256_movedup_pd(x);          // [xr0,xr0,xr1,xr1]
    const __m256d x_im = _mm256_permute_pd(x, 0xF);     // [xi0,xi0,xi1,xi1]
    const __m256d y_swap = _mm256_permute_pd(y, 0x5);   // [yi0,yr0,yi1,yr1]
    // even lanes: xr*yr - xi*yi, odd lanes: xr*yi + xi*yr
    return _mm256_fmaddsub_pd(x_re, y, _mm256_mul_pd(x_im, y_swap));
}

// (scalar complex c) * (two packed complex values v), with c pre-split.
inline __m256d cmul_scalar(__m256d c_re, __m256d c_im, __m256d v) {
    const __m256d v_swap = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(c_re, v, _mm256_mul_pd(c_im, v_swap));
}

inline __m256d broadcast_complex(const Complex& c) {
    return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&c));
}

} // namespace

void apply_single_qubit(Complex* amps, std::size_t n, int target,
                        const Complex* u) {
    double* d = reinterpret_cast<double*>(amps);

    if (target == 0) {
        // Group members are adjacent: [a0, a1] live in one 256-bit load.
        const __m256d diag = _mm256_setr_pd(u[0].real(), u[0].imag(),
                                            u[3].real(), u[3].imag());
        const __m256d anti = _mm256_setr_pd(u[1].real(), u[1].imag(),
                                            u[2].real(), u[2].imag());
        const __m256d diag_re = _mm256_movedup_pd(diag);
        const __m256d diag_im = _mm256_permute_pd(diag, 0xF);
        const __m256d anti_re = _mm256_movedup_pd(anti);
        const __m256d anti_im = _mm256_permute_pd(anti, 0xF);
        for (std::size_t i = 0; i + 2 <= n; i += 2) {
            const __m256d v = _mm256_loadu_pd(d + 2 * i);
            const __m256d v_rev = _mm256_permute4x64_pd(v, 0x4E); // [a1, a0]
            const __m256d t = _mm256_mul_pd(anti_im, _mm256_permute_pd(v_rev, 0x5));
            __m256d out = _mm256_fmaddsub_pd(anti_re, v_rev, t);
            out = _mm256_add_pd(out, cmul_scalar(diag_re, diag_im, v));
            _mm256_storeu_pd(d + 2 * i, out);
        }
        return;
    }

    // target >= 1: pair members are mask apart and bit 0 is free, so two
    // groups can be processed per iteration from contiguous loads.
    const std::size_t mask = std::size_t{1} << target;
    const __m256d u00_re = _mm256_set1_pd(u[0].real());
    const __m256d u00_im = _mm256_set1_pd(u[0].imag());
    const __m256d u01_re = _mm256_set1_pd(u[1].real());
    const __m256d u01_im = _mm256_set1_pd(u[1].imag());
    const __m256d u10_re = _mm256_set1_pd(u[2].real());
    const __m256d u10_im = _mm256_set1_pd(u[2].imag());
    const __m256d u11_re = _mm256_set1_pd(u[3].real());
    const __m256d u11_im = _mm256_set1_pd(u[3].imag());

    for (std::size_t base = 0; base < n; base += 2 * mask) {
        for (std::size_t low = 0; low < mask; low += 2) {
            const std::size_t i0 = base + low;
            const std::size_t i1 = i0 | mask;
            const __m256d v0 = _mm256_loadu_pd(d + 2 * i0);
            const __m256d v1 = _mm256_loadu_pd(d + 2 * i1);
            const __m256d out0 = _mm256_add_pd(cmul_scalar(u00_re, u00_im, v0),
                                               cmul_scalar(u01_re, u01_im, v1));
            const __m256d out1 = _mm256_add_pd(cmul_scalar(u10_re, u10_im, v0),
                                               cmul_scalar(u11_re, u11_im, v1));
            _mm256_storeu_pd(d + 2 * i0, out0);
            _mm256_storeu_pd(d + 2 * i1, out1);
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

    // Column-packed matrix: col[h] feeds the h-th input amplitude into the
    // pairs (out0, out1) and (out2, out3).
    __m256d col01[4], col23[4];
    for (int h = 0; h < 4; ++h) {
        col01[h] = _mm256_setr_pd(u[0 * 4 + h].real(), u[0 * 4 + h].imag(),
                                  u[1 * 4 + h].real(), u[1 * 4 + h].imag());
        col23[h] = _mm256_setr_pd(u[2 * 4 + h].real(), u[2 * 4 + h].imag(),
                                  u[3 * 4 + h].real(), u[3 * 4 + h].imag());
    }

    double* d = reinterpret_cast<double*>(amps);
    for (std::size_t i = 0; i < n / 4; ++i) {
        const std::size_t base = (i & lo_mask) | ((i & mid_mask) << 1) |
                                 ((i & ~(lo_mask | mid_mask)) << 2);
        const std::size_t idx[4] = {base, base | bit_b, base | bit_a,
                                    base | bit_a | bit_b};
        __m256d acc01 = _mm256_setzero_pd();
        __m256d acc23 = _mm256_setzero_pd();
        for (int h = 0; h < 4; ++h) {
            const __m256d ah = broadcast_complex(amps[idx[h]]);
            acc01 = _mm256_add_pd(acc01, cmul(col01[h], ah));
            acc23 = _mm256_add_pd(acc23, cmul(col23[h], ah));
        }
        _mm_storeu_pd(d + 2 * idx[0], _mm256_castpd256_pd128(acc01));
        _mm_storeu_pd(d + 2 * idx[1], _mm256_extractf128_pd(acc01, 1));
        _mm_storeu_pd(d + 2 * idx[2], _mm256_castpd256_pd128(acc23));
        _mm_storeu_pd(d + 2 * idx[3], _mm256_extractf128_pd(acc23, 1));
    }
}

double min_affine_pair(const double* a, const double* b, double wa, double wb,
                       std::size_t n) {
    const __m256d va = _mm256_set1_pd(wa);
    const __m256d vb = _mm256_set1_pd(wb);
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_fmadd_pd(va, _mm256_loadu_pd(a + i),
                                          _mm256_mul_pd(vb, _mm256_loadu_pd(b + i)));
        best = _mm256_min_pd(best, v);
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, best);
    double out = lanes[0];
    for (int k = 1; k < 4; ++k)
        out = lanes[k] < out ? lanes[k] : out;
    for (; i < n; ++i) {
        const double v = wa * a[i] + wb * b[i];
        if (v < out)
            out = v;
    }
    return out;
}

} // namespace clonebound::kernels::avx2

namespace clonebound::kernels {
bool avx2_compiled() { return true; }
} // namespace clonebound::kernels
