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

#include "clonebound/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace clonebound {

Tolerances tolerances_from_env() {
    Tolerances tol;
    if (const char* raw = std::getenv("CLONEBOUND_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(raw, &end);
        if (end != raw && v > 0.0) {
            tol.hermitian = v;
            tol.eigenvalue_floor = v;
            tol.trace = v;
            tol.unit_norm = v;
            tol.kraus_completeness = v;
            tol.gate_unitarity = v;
            tol.probability_sum = v;
            tol.feasibility = v;
        }
    }
    return tol;
}

} // namespace clonebound

namespace clonebound::qstate {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

} // namespace

DensityOperator make_density(const CMatrix& matrix, const Tolerances& tol) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
        throw DimensionMismatch("density operator must be a square matrix");

    const double herm_dev = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol.hermitian)
        throw NotHermitian("matrix deviates from Hermiticity by " +
                           std::to_string(herm_dev));

    // Work with the Hermitian part; clamp roundoff-negative eigenvalues and
    // reassemble so downstream code sees an exactly PSD operator.
    const CMatrix herm = (matrix + matrix.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm);
    Eigen::VectorXd vals = eig.eigenvalues();
    if (vals.minCoeff() < -tol.eigenvalue_floor)
        throw NotPositive("eigenvalue " + std::to_string(vals.minCoeff()) +
                          " below the PSD floor");
    vals = vals.cwiseMax(0.0);

    CMatrix out = eig.eigenvectors() * vals.asDiagonal() *
                  eig.eigenvectors().adjoint();
    const double tr = out.trace().real();
    if (std::abs(tr - 1.0) > tol.trace)
        throw BadTrace("trace " + std::to_string(tr));
    return DensityOperator(std::move(out));
}

PureState make_pure(const CVector& vector, const Tolerances& tol) {
    if (vector.size() < 1)
        throw DimensionMismatch("empty state vector");
    const double nrm = vector.norm();
    if (std::abs(nrm - 1.0) > tol.unit_norm)
        throw InvariantViolation("state vector norm " + std::to_string(nrm));
    return PureState(vector / nrm);
}

PureState real_qubit_state(double alpha, Sign sign) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 4))
        throw AlphaOutOfRange("alpha = " + std::to_string(alpha));
    CVector v(2);
    v << std::cos(alpha),
        (sign == Sign::plus ? std::sin(alpha) : -std::sin(alpha));
    return make_pure(v);
}

DensityOperator to_density(const PureState& psi) {
    const CVector& v = psi.vector();
    return make_density(v * v.adjoint());
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    CMatrix m = Eigen::kroneckerProduct(a.matrix(), b.matrix());
    return make_density(m);
}

PureState tensor(const PureState& a, const PureState& b) {
    CVector v = Eigen::kroneckerProduct(a.vector(), b.vector());
    return make_pure(v);
}

namespace {

std::int64_t checked_power_dim(Eigen::Index dim, int k, std::int64_t cap) {
    std::int64_t d = 1;
    for (int i = 0; i < k; ++i) {
        d *= dim;
        if (d > cap)
            throw DimensionCapExceeded("tensor power dimension exceeds cap " +
                                       std::to_string(cap));
    }
    return d;
}

} // namespace

DensityOperator tensor_power(const DensityOperator& rho, int k,
                             const Tolerances& tol) {
    if (k < 1)
        throw DimensionMismatch("tensor power requires k >= 1");
    checked_power_dim(rho.dim(), k, tol.dimension_cap);
    CMatrix out = rho.matrix();
    for (int i = 1; i < k; ++i)
        out = Eigen::kroneckerProduct(out, rho.matrix()).eval();
    return make_density(out, tol);
}

PureState tensor_power(const PureState& psi, int k, const Tolerances& tol) {
    if (k < 1)
        throw DimensionMismatch("tensor power requires k >= 1");
    checked_power_dim(psi.dim(), k, tol.dimension_cap);
    CVector out = psi.vector();
    for (int i = 1; i < k; ++i)
        out = Eigen::kroneckerProduct(out, psi.vector()).eval();
    return make_pure(out, tol);
}

CMatrix sqrt_psd(const CMatrix& a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(a);
    const Eigen::VectorXd vals = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().adjoint();
}

double trace_abs(const CMatrix& a) {
    // Jacobi SVD keeps the small singular values accurate; the property
    // suites compare quantities at 1e-9 and cannot afford the squared
    // conditioning of an A^dag A eigendecomposition.
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues().sum();
}

double fidelity(const DensityOperator& omega, const DensityOperator& sigma) {
    if (omega.dim() != sigma.dim())
        throw DimensionMismatch("fidelity of operators with different dims");
    const double t = trace_abs(sqrt_psd(omega.matrix()) * sqrt_psd(sigma.matrix()));
    return clamp01(t * t);
}

MetricReport metrics(const DensityOperator& omega, const DensityOperator& sigma) {
    const double f = fidelity(omega, sigma);
    MetricReport r;
    r.fidelity = f;
    r.angle = std::acos(clamp01(std::sqrt(f)));
    r.sine_distance = std::sin(r.angle);
    r.bures_metric = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(f)));
    return r;
}

Channel make_channel(std::vector<CMatrix> kraus_ops, const Tolerances& tol) {
    if (kraus_ops.empty())
        throw IncompleteKraus("channel needs at least one Kraus operator");
    const Eigen::Index din = kraus_ops.front().cols();
    const Eigen::Index dout = kraus_ops.front().rows();
    CMatrix sum = CMatrix::Zero(din, din);
    for (const CMatrix& k : kraus_ops) {
        if (k.cols() != din || k.rows() != dout)
            throw DimensionMismatch("Kraus operators of mixed shapes");
        sum += k.adjoint() * k;
    }
    const double dev = (sum - CMatrix::Identity(din, din)).cwiseAbs().maxCoeff();
    if (dev > tol.kraus_completeness)
        throw IncompleteKraus("sum K^dag K deviates from identity by " +
                              std::to_string(dev));
    return Channel(std::move(kraus_ops));
}

DensityOperator apply_channel(const Channel& ch, const DensityOperator& rho,
                              const Tolerances& tol) {
    if (ch.dim_in() != rho.dim())
        throw DimensionMismatch("channel input dimension mismatch");
    CMatrix out = CMatrix::Zero(ch.dim_out(), ch.dim_out());
    for (const CMatrix& k : ch.kraus())
        out += k * rho.matrix() * k.adjoint();
    return make_density(out, tol);
}

} // namespace clonebound::qstate
