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

#include "clonebound/statevector.hpp"

#include <cmath>

#include "clonebound/kernels.hpp"

namespace clonebound::circuit {

StateVector::StateVector(int num_qubits, const Tolerances& tol) {
    if (num_qubits < 1)
        throw RegisterTooLarge("register needs at least one qubit");
    if (num_qubits > tol.qubit_cap)
        throw RegisterTooLarge("register of " + std::to_string(num_qubits) +
                               " qubits exceeds the cap of " +
                               std::to_string(tol.qubit_cap));
    num_qubits_ = num_qubits;
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::product(const std::vector<Eigen::Vector2cd>& qubits,
                                 const Tolerances& tol) {
    StateVector sv(static_cast<int>(qubits.size()), tol);
    // Extend one qubit at a time; qubit p lands on index bit p.
    std::size_t filled = 1;
    sv.amps_[0] = Complex{1.0, 0.0};
    for (std::size_t p = 0; p < qubits.size(); ++p) {
        const Complex c0 = qubits[p](0);
        const Complex c1 = qubits[p](1);
        for (std::size_t i = 0; i < filled; ++i) {
            const Complex base = sv.amps_[i];
            sv.amps_[i] = base * c0;
            sv.amps_[i | (std::size_t{1} << p)] = base * c1;
        }
        filled <<= 1;
    }
    return sv;
}

void StateVector::check_target(int target) const {
    if (target < 0 || target >= num_qubits_)
        throw RegisterTooLarge("gate target " + std::to_string(target) +
                               " outside the register");
}

void StateVector::apply_single(int target, const Eigen::Matrix2cd& u) {
    check_target(target);
    const Complex m[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
    kernels::apply_single_qubit(amps_.data(), amps_.size(), target, m);
}

void StateVector::apply_two(int target_a, int target_b,
                            const Eigen::Matrix4cd& u) {
    check_target(target_a);
    check_target(target_b);
    if (target_a == target_b)
        throw RegisterTooLarge("two-qubit gate needs distinct targets");
    Complex m[16];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m[4 * r + c] = u(r, c);
    kernels::apply_two_qubit(amps_.data(), amps_.size(), target_a, target_b, m);
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Complex& a : amps_)
        s += std::norm(a);
    return std::sqrt(s);
}

Complex StateVector::inner(const StateVector& other) const {
    if (other.num_qubits_ != num_qubits_)
        throw DimensionMismatch("inner product of different registers");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i)
        s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

StateVector StateVector::drop_qubit(int qubit, double& residual) const {
    check_target(qubit);
    if (num_qubits_ < 2)
        throw RegisterTooLarge("cannot drop the only qubit");
    StateVector out;
    out.num_qubits_ = num_qubits_ - 1;
    out.amps_.resize(amps_.size() / 2);

    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t low_mask = bit - 1;
    double kept = 0.0, dropped = 0.0;
    for (std::size_t i = 0; i < out.amps_.size(); ++i) {
        const std::size_t src = (i & low_mask) | ((i & ~low_mask) << 1);
        out.amps_[i] = amps_[src];
        kept += std::norm(amps_[src]);
        dropped += std::norm(amps_[src | bit]);
    }
    residual = std::sqrt(dropped);
    const double nrm = std::sqrt(kept);
    if (nrm > 0.0)
        for (Complex& a : out.amps_)
            a /= nrm;
    return out;
}

Eigen::VectorXcd StateVector::as_vector() const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps_.size()));
    for (std::size_t i = 0; i < amps_.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = amps_[i];
    return v;
}

} // namespace clonebound::circuit
