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

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "clonebound/qstate.hpp"
#include "test_support.hpp"

using namespace clonebound;
using namespace clonebound::qstate;
using test_support::Rng;

namespace {

const double pi = std::numbers::pi;

DensityOperator basis_state(int which) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(which, which) = 1.0;
    return make_density(m);
}

DensityOperator maximally_mixed_qubit() {
    return make_density(CMatrix::Identity(2, 2) / 2.0);
}

} // namespace

TEST_CASE("make_density validates and clamps") {
    SUBCASE("maximally mixed qubit") {
        const DensityOperator rho = maximally_mixed_qubit();
        CHECK(rho.dim() == 2);
        CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
    }
    SUBCASE("pure projector") {
        const DensityOperator rho = basis_state(0);
        CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("eigenvalue -1e-3 is rejected") {
        CMatrix m = CMatrix::Zero(2, 2);
        m(0, 0) = 1.0 + 1e-3;
        m(1, 1) = -1e-3;
        CHECK_THROWS_AS(make_density(m), NotPositive);
    }
    SUBCASE("roundoff negatives are clamped") {
        CMatrix m = CMatrix::Zero(2, 2);
        m(0, 0) = 1.0 + 5e-11;
        m(1, 1) = -5e-11;
        const DensityOperator rho = make_density(m);
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho.matrix());
        CHECK(eig.eigenvalues().minCoeff() >= -1e-15);
    }
    SUBCASE("non-Hermitian is rejected") {
        CMatrix m(2, 2);
        m << Complex{0.5, 0.0}, Complex{0.1, 0.2}, Complex{0.1, -0.1},
            Complex{0.5, 0.0};
        CHECK_THROWS_AS(make_density(m), NotHermitian);
    }
    SUBCASE("bad trace is rejected") {
        CHECK_THROWS_AS(make_density(CMatrix::Identity(2, 2)), BadTrace);
    }
    SUBCASE("non-square is rejected") {
        CHECK_THROWS_AS(make_density(CMatrix::Zero(2, 3)), DimensionMismatch);
    }
}

TEST_CASE("real_qubit_state") {
    SUBCASE("alpha = 0 gives |0>") {
        const PureState psi = real_qubit_state(0.0, Sign::plus);
        CHECK(std::abs(psi.vector()(0) - 1.0) < 1e-15);
        CHECK(std::abs(psi.vector()(1)) < 1e-15);
    }
    SUBCASE("alpha = pi/4 minus gives (|0> - |1>)/sqrt(2)") {
        const PureState psi = real_qubit_state(pi / 4, Sign::minus);
        CHECK(psi.vector()(0).real() == doctest::Approx(std::sqrt(0.5)));
        CHECK(psi.vector()(1).real() == doctest::Approx(-std::sqrt(0.5)));
    }
    SUBCASE("overlap at pi/8 is cos(pi/4)") {
        const PureState plus = real_qubit_state(pi / 8, Sign::plus);
        const PureState minus = real_qubit_state(pi / 8, Sign::minus);
        const Complex overlap = plus.vector().dot(minus.vector());
        CHECK(overlap.real() ==
              doctest::Approx(0.7071067811865476).epsilon(1e-12));
        CHECK(std::abs(overlap.imag()) < 1e-15);
    }
    SUBCASE("range checks") {
        CHECK_THROWS_AS(real_qubit_state(-0.1, Sign::plus), AlphaOutOfRange);
        CHECK_THROWS_AS(real_qubit_state(1.0, Sign::plus), AlphaOutOfRange);
    }
}

TEST_CASE("tensor_power") {
    Rng rng(17);
    const DensityOperator rho = test_support::random_density(rng, 2);

    SUBCASE("k = 1 is the identity operation") {
        const DensityOperator one = tensor_power(rho, 1);
        CHECK((one.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("qubit to the third power has dimension 8") {
        const DensityOperator cube = tensor_power(rho, 3);
        CHECK(cube.dim() == 8);
        CHECK(cube.matrix().trace().real() == doctest::Approx(1.0));
    }
    SUBCASE("fidelity of squares equals squared fidelity") {
        // Both sides computed explicitly on 4x4 matrices.
        const DensityOperator sigma = test_support::random_density(rng, 2);
        const double direct =
            fidelity(tensor_power(rho, 2), tensor_power(sigma, 2));
        const double f1 = fidelity(rho, sigma);
        CHECK(direct == doctest::Approx(f1 * f1).epsilon(1e-11));
    }
    SUBCASE("dimension cap") {
        Tolerances tight;
        tight.dimension_cap = 64;
        CHECK_THROWS_AS(tensor_power(rho, 7, tight), DimensionCapExceeded);
        const DensityOperator rho4 = test_support::random_density(rng, 4);
        CHECK_THROWS_AS(tensor_power(rho4, 8), DimensionCapExceeded);
    }
    SUBCASE("pure-state powers multiply overlaps") {
        const PureState psi = test_support::random_pure(rng, 2);
        const PureState phi = test_support::random_pure(rng, 2);
        const Complex single = psi.vector().dot(phi.vector());
        const Complex cubed = tensor_power(psi, 3)
                                  .vector()
                                  .dot(tensor_power(phi, 3).vector());
        CHECK(std::abs(cubed - single * single * single) < 1e-12);
        const PureState joint = tensor(psi, phi);
        CHECK(joint.dim() == 4);
        CHECK(std::abs(joint.vector().norm() - 1.0) < 1e-14);
    }
}

TEST_CASE("fidelity") {
    Rng rng(23);
    SUBCASE("identical states") {
        const DensityOperator rho = test_support::random_density(rng, 3);
        CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("orthogonal pure states") {
        CHECK(fidelity(basis_state(0), basis_state(1)) ==
              doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("mixed against pure, diagonal") {
        CHECK(fidelity(maximally_mixed_qubit(), basis_state(0)) ==
              doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("symmetry") {
        const DensityOperator a = test_support::random_density(rng, 4);
        const DensityOperator b = test_support::random_density(rng, 4);
        CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)).epsilon(1e-13));
    }
    SUBCASE("dimension mismatch") {
        const DensityOperator a = test_support::random_density(rng, 2);
        const DensityOperator b = test_support::random_density(rng, 3);
        CHECK_THROWS_AS(fidelity(a, b), DimensionMismatch);
    }
}

TEST_CASE("metrics") {
    SUBCASE("fidelity one half") {
        const MetricReport r = metrics(maximally_mixed_qubit(), basis_state(0));
        CHECK(r.angle == doctest::Approx(pi / 4).epsilon(1e-10));
        CHECK(r.sine_distance == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
        CHECK(r.bures_metric ==
              doctest::Approx(std::sqrt(2.0 - std::sqrt(2.0))).epsilon(1e-10));
    }
    SUBCASE("identical states") {
        const DensityOperator rho = maximally_mixed_qubit();
        const MetricReport r = metrics(rho, rho);
        CHECK(r.angle == doctest::Approx(0.0).epsilon(1e-7));
        CHECK(r.sine_distance == doctest::Approx(0.0).epsilon(1e-7));
        CHECK(r.bures_metric == doctest::Approx(0.0).epsilon(1e-7));
    }
    SUBCASE("internal consistency") {
        Rng rng(31);
        for (int trial = 0; trial < 50; ++trial) {
            const DensityOperator a = test_support::random_density(rng, 3);
            const DensityOperator b = test_support::random_density(rng, 3);
            const MetricReport r = metrics(a, b);
            CHECK(std::cos(r.angle) * std::cos(r.angle) ==
                  doctest::Approx(r.fidelity).epsilon(1e-10));
            CHECK(r.sine_distance == doctest::Approx(std::sin(r.angle)));
            CHECK(r.bures_metric ==
                  doctest::Approx(std::sqrt(2 - 2 * std::sqrt(r.fidelity))));
        }
    }
}

TEST_CASE("channels") {
    Rng rng(41);
    const DensityOperator rho = test_support::random_density(rng, 2);

    SUBCASE("identity channel") {
        const Channel id = make_channel({CMatrix::Identity(2, 2)});
        const DensityOperator out = apply_channel(id, rho);
        CHECK((out.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("bit flip") {
        CMatrix x(2, 2);
        x << 0, 1, 1, 0;
        const DensityOperator out =
            apply_channel(make_channel({x}), basis_state(0));
        CHECK((out.matrix() - basis_state(1).matrix()).cwiseAbs().maxCoeff() <
              1e-13);
    }
    SUBCASE("partial trace recovers the first factor") {
        const DensityOperator sigma = test_support::random_density(rng, 3);
        std::vector<CMatrix> kraus;
        for (int i = 0; i < 3; ++i) {
            CMatrix bra = CMatrix::Zero(1, 3);
            bra(0, i) = 1.0;
            kraus.push_back(
                Eigen::kroneckerProduct(CMatrix::Identity(2, 2), bra).eval());
        }
        const DensityOperator out =
            apply_channel(make_channel(std::move(kraus)), tensor(rho, sigma));
        CHECK((out.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("incomplete Kraus family is rejected") {
        CMatrix x(2, 2);
        x << 0, 0.5, 0.5, 0;
        CHECK_THROWS_AS(make_channel({x}), IncompleteKraus);
    }
    SUBCASE("input dimension mismatch") {
        const Channel id = make_channel({CMatrix::Identity(2, 2)});
        CHECK_THROWS_AS(apply_channel(id, test_support::random_density(rng, 4)),
                        DimensionMismatch);
    }
}

// Property suites; the acceptance run repeats these at 1000 trials each.

TEST_CASE("triangle inequality for the angle") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index dim = test_support::uniform_int(rng, 2, 4);
        const DensityOperator w = test_support::random_density(rng, dim);
        const DensityOperator s = test_support::random_density(rng, dim);
        const DensityOperator e = test_support::random_density(rng, dim);
        const double lhs = metrics(w, s).angle;
        const double rhs = metrics(w, e).angle + metrics(s, e).angle;
        CHECK(lhs <= rhs + 1e-9);
    }
}

TEST_CASE("sine distance bounds outcome probability differences") {
    Rng rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index dim = test_support::uniform_int(rng, 2, 4);
        const DensityOperator w = test_support::random_density(rng, dim);
        const DensityOperator s = test_support::random_density(rng, dim);
        const double d = metrics(w, s).sine_distance;

        // two-outcome POVM {A, I - A}
        const CMatrix a = test_support::random_effect(rng, dim);
        const double gap = std::abs((a * (w.matrix() - s.matrix())).trace().real());
        CHECK(gap <= d + 1e-9);

        // rank-1 effect
        const CVector u = test_support::random_pure(rng, dim).vector();
        const CMatrix r1 = test_support::uniform(rng, 0.0, 1.0) * u * u.adjoint();
        const double gap1 =
            std::abs((r1 * (w.matrix() - s.matrix())).trace().real());
        CHECK(gap1 <= d + 1e-9);
    }
}

TEST_CASE("sine distance bounds fidelity differences through channels") {
    Rng rng(107);
    for (int trial = 0; trial < 150; ++trial) {
        const Eigen::Index dim = test_support::uniform_int(rng, 2, 3);
        const Eigen::Index dim_out = test_support::uniform_int(rng, 2, 3);
        const int n_kraus = test_support::uniform_int(rng, 1, 4);
        const Channel ch = test_support::random_channel(rng, dim, dim_out, n_kraus);
        const DensityOperator w = test_support::random_density(rng, dim);
        const DensityOperator s = test_support::random_density(rng, dim);
        const DensityOperator eta = test_support::random_density(rng, dim_out);
        const double lhs = std::abs(fidelity(apply_channel(ch, w), eta) -
                                    fidelity(apply_channel(ch, s), eta));
        CHECK(lhs <= metrics(w, s).sine_distance + 1e-9);
    }
}

TEST_CASE("fidelity multiplicativity") {
    Rng rng(109);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityOperator w = test_support::random_density(rng, 2);
        const DensityOperator w2 = test_support::random_density(rng, 3);
        const DensityOperator s = test_support::random_density(rng, 2);
        const DensityOperator s2 = test_support::random_density(rng, 3);
        const double joint = fidelity(tensor(w, w2), tensor(s, s2));
        CHECK(std::abs(joint - fidelity(w, s) * fidelity(w2, s2)) <= 1e-9);
    }
}

TEST_CASE("pure-state fidelity is the squared overlap") {
    Rng rng(113);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index dim = test_support::uniform_int(rng, 2, 4);
        const PureState psi = test_support::random_pure(rng, dim);
        const PureState phi = test_support::random_pure(rng, dim);
        const double f = fidelity(to_density(psi), to_density(phi));
        const double overlap = std::norm(psi.vector().dot(phi.vector()));
        CHECK(std::abs(f - overlap) <= 1e-10);
    }
}
