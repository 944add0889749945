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

#include <doctest.h>

#include <limits>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "clonebound/kernels.hpp"
#include "test_support.hpp"

using namespace clonebound;
using test_support::Rng;

namespace {

bool avx2_runnable() {
    return kernels::avx2_compiled() && kernels::cpu_supports_avx2();
}

std::vector<kernels::Complex> random_state(Rng& rng, int qubits) {
    const auto v = test_support::random_complex_matrix(
        rng, Eigen::Index{1} << qubits, 1);
    return {v.data(), v.data() + v.size()};
}

double max_abs_diff(const std::vector<kernels::Complex>& a,
                    const std::vector<kernels::Complex>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

// Dense reference: embed the gate into the full 2^n unitary with Kronecker
// products and multiply.
std::vector<kernels::Complex>
dense_apply(const std::vector<kernels::Complex>& amps,
            const Eigen::MatrixXcd& gate, const std::vector<int>& targets,
            int qubits) {
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row)
        for (Eigen::Index col = 0; col < dim; ++col) {
            // Entry is gate(g_row, g_col) when the non-target bits agree.
            bool same_elsewhere = true;
            for (int b = 0; b < qubits; ++b) {
                bool is_target = false;
                for (int t : targets)
                    is_target |= (t == b);
                if (!is_target && ((row >> b) & 1) != ((col >> b) & 1))
                    same_elsewhere = false;
            }
            if (!same_elsewhere)
                continue;
            Eigen::Index g_row = 0, g_col = 0;
            for (std::size_t k = 0; k < targets.size(); ++k) {
                const int shift = static_cast<int>(targets.size()) - 1 -
                                  static_cast<int>(k);
                g_row |= ((row >> targets[k]) & 1) << shift;
                g_col |= ((col >> targets[k]) & 1) << shift;
            }
            full(row, col) = gate(g_row, g_col);
        }
    Eigen::Map<const Eigen::VectorXcd> v(amps.data(),
                                         static_cast<Eigen::Index>(amps.size()));
    const Eigen::VectorXcd out = full * v;
    return {out.data(), out.data() + out.size()};
}

} // namespace

TEST_CASE("single-qubit kernel matches the dense reference") {
    Rng rng(811);
    for (int qubits = 1; qubits <= 5; ++qubits) {
        for (int target = 0; target < qubits; ++target) {
            const auto amps = random_state(rng, qubits);
            const Eigen::MatrixXcd g =
                test_support::random_complex_matrix(rng, 2, 2);
            const kernels::Complex u[4] = {g(0, 0), g(0, 1), g(1, 0), g(1, 1)};

            auto got = amps;
            kernels::scalar::apply_single_qubit(got.data(), got.size(), target, u);
            const auto want = dense_apply(amps, g, {target}, qubits);
            CHECK(max_abs_diff(got, want) < 1e-12);
        }
    }
}

TEST_CASE("two-qubit kernel matches the dense reference") {
    Rng rng(977);
    for (int qubits = 2; qubits <= 5; ++qubits) {
        for (int trial = 0; trial < 6; ++trial) {
            const int ta = test_support::uniform_int(rng, 0, qubits - 1);
            int tb = test_support::uniform_int(rng, 0, qubits - 2);
            if (tb >= ta)
                ++tb;
            const auto amps = random_state(rng, qubits);
            const Eigen::MatrixXcd g =
                test_support::random_complex_matrix(rng, 4, 4);
            kernels::Complex u[16];
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    u[4 * r + c] = g(r, c);

            auto got = amps;
            kernels::scalar::apply_two_qubit(got.data(), got.size(), ta, tb, u);
            const auto want = dense_apply(amps, g, {ta, tb}, qubits);
            CHECK(max_abs_diff(got, want) < 1e-12);
        }
    }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!avx2_runnable()) {
        MESSAGE("AVX2 unavailable on this host; dispatch stays scalar");
        return;
    }
    Rng rng(1223);

    for (int qubits = 1; qubits <= 10; ++qubits) {
        for (int target = 0; target < qubits; ++target) {
            const auto amps = random_state(rng, qubits);
            const Eigen::MatrixXcd g =
                test_support::random_complex_matrix(rng, 2, 2);
            const kernels::Complex u[4] = {g(0, 0), g(0, 1), g(1, 0), g(1, 1)};
            auto a = amps, b = amps;
            kernels::scalar::apply_single_qubit(a.data(), a.size(), target, u);
            kernels::avx2::apply_single_qubit(b.data(), b.size(), target, u);
            CHECK(max_abs_diff(a, b) < 1e-13);
        }
    }

    for (int trial = 0; trial < 40; ++trial) {
        const int qubits = test_support::uniform_int(rng, 2, 10);
        const int ta = test_support::uniform_int(rng, 0, qubits - 1);
        int tb = test_support::uniform_int(rng, 0, qubits - 2);
        if (tb >= ta)
            ++tb;
        const auto amps = random_state(rng, qubits);
        const Eigen::MatrixXcd g = test_support::random_complex_matrix(rng, 4, 4);
        kernels::Complex u[16];
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                u[4 * r + c] = g(r, c);
        auto a = amps, b = amps;
        kernels::scalar::apply_two_qubit(a.data(), a.size(), ta, tb, u);
        kernels::avx2::apply_two_qubit(b.data(), b.size(), ta, tb, u);
        CHECK(max_abs_diff(a, b) < 1e-13);
    }
}

TEST_CASE("dispatched kernels agree with the scalar reference") {
    Rng rng(431);
    const auto amps = random_state(rng, 8);
    const Eigen::MatrixXcd g = test_support::random_complex_matrix(rng, 2, 2);
    const kernels::Complex u[4] = {g(0, 0), g(0, 1), g(1, 0), g(1, 1)};
    auto a = amps, b = amps;
    kernels::scalar::apply_single_qubit(a.data(), a.size(), 3, u);
    kernels::apply_single_qubit(b.data(), b.size(), 3, u);
    CHECK(max_abs_diff(a, b) < 1e-13);
    CHECK((std::string(kernels::active_backend()) == "avx2" ||
           std::string(kernels::active_backend()) == "scalar"));
}

TEST_CASE("min_affine_pair reductions") {
    Rng rng(59);
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5},
                          std::size_t{64}, std::size_t{1001}}) {
        std::vector<double> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = test_support::uniform(rng, -2.0, 2.0);
            b[i] = test_support::uniform(rng, -2.0, 2.0);
        }
        const double wa = test_support::uniform(rng, 0.0, 3.0);
        const double wb = test_support::uniform(rng, 0.0, 3.0);

        double expect = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i)
            expect = std::min(expect, wa * a[i] + wb * b[i]);

        const double scalar =
            kernels::scalar::min_affine_pair(a.data(), b.data(), wa, wb, n);
        if (n == 0)
            CHECK(scalar == std::numeric_limits<double>::infinity());
        else
            CHECK(scalar == doctest::Approx(expect).epsilon(1e-14));

        if (avx2_runnable()) {
            const double vec =
                kernels::avx2::min_affine_pair(a.data(), b.data(), wa, wb, n);
            if (n == 0)
                CHECK(vec == std::numeric_limits<double>::infinity());
            else
                CHECK(vec == doctest::Approx(expect).epsilon(1e-13));
        }
    }
}
