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

#include "clonebound/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clonebound/bounds.hpp"

namespace clonebound::circuit {

namespace {

constexpr double quarter_pi = std::numbers::pi / 4.0;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

Eigen::Vector2cd real_qubit(double angle, int sign) {
    return {std::cos(angle), sign * std::sin(angle)};
}

// |phi_pm(alpha)> (x) |phi_pm(beta)> and friends, as dense 4-vectors.
Eigen::Vector4cd kron2(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
    Eigen::Vector4cd v;
    v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return v;
}

// Angle between unit vectors, phase-free. arccos of an inner product cannot
// resolve angles below ~sqrt(machine eps); near alignment the angle comes
// from the norm of the residual orthogonal to the reference instead.
double state_angle(const StateVector& reference, const StateVector& actual) {
    const Complex ip = reference.inner(actual);
    const double c = std::abs(ip);
    if (c < 0.8)
        return std::acos(clamp01(c));
    const auto& u = actual.amplitudes();
    const auto& v = reference.amplitudes();
    double r2 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        r2 += std::norm(u[i] - ip * v[i]);
    return std::asin(clamp01(std::sqrt(r2)));
}

} // namespace

void validate(const GateSpec& gate, const Tolerances& tol) {
    const Eigen::Index d = gate.unitary.rows();
    if (gate.unitary.cols() != d || (d != 2 && d != 4))
        throw InvariantViolation("gate blocks must be 2x2 or 4x4");
    const double dev = (gate.unitary.adjoint() * gate.unitary -
                        Eigen::MatrixXcd::Identity(d, d))
                           .cwiseAbs()
                           .maxCoeff();
    if (dev > tol.gate_unitarity)
        throw InvariantViolation("gate deviates from unitarity by " +
                                 std::to_string(dev));
    if (!gate.targets.empty()) {
        const std::size_t expected = d == 2 ? 1 : 2;
        if (gate.targets.size() != expected)
            throw InvariantViolation("target count does not match block size");
        if (expected == 2 && gate.targets[0] == gate.targets[1])
            throw InvariantViolation("two-qubit gate targets must differ");
    }
}

GateSpec d_gate(double alpha, double beta) {
    if (!(alpha >= 0.0 && alpha <= quarter_pi) ||
        !(beta >= 0.0 && beta <= quarter_pi))
        throw AngleOutOfRange("d_gate angles must lie in [0, pi/4]");

    const double gamma =
        0.5 * std::acos(clamp01(std::cos(2 * alpha) * std::cos(2 * beta)));

    // The gate swaps u_i <-> v_i, so it is the reflection negating the
    // difference directions and fixing everything orthogonal to them:
    // D = I - 2 P with P the projector onto span{u_i - v_i}. The sums
    // u_i + v_i are orthogonal to both differences, which makes the two
    // defining mappings exact.
    const Eigen::Vector2cd zero{1.0, 0.0};
    Eigen::Matrix4cd proj = Eigen::Matrix4cd::Zero();
    std::vector<Eigen::Vector4cd> basis;
    for (int sign : {+1, -1}) {
        const Eigen::Vector4cd u =
            kron2(real_qubit(alpha, sign), real_qubit(beta, sign));
        const Eigen::Vector4cd v = kron2(real_qubit(gamma, sign), zero);
        Eigen::Vector4cd diff = u - v;
        for (const Eigen::Vector4cd& b : basis)
            diff -= b.dot(diff) * b;
        if (diff.norm() > 1e-9) {
            diff.normalize();
            basis.push_back(diff);
            proj += diff * diff.adjoint();
        }
    }

    GateSpec gate;
    gate.unitary = Eigen::Matrix4cd::Identity() - 2.0 * proj;
    gate.name = "D";
    gate.params = {alpha, beta};
    validate(gate);
    return gate;
}

GateSpec t_gate(double theta1, double alpha_target) {
    if (theta1 > alpha_target)
        throw AngleOrderViolation("t_gate needs theta1 <= alpha_target");
    if (theta1 < 0.0 || alpha_target > quarter_pi)
        throw AngleOutOfRange("t_gate angles must lie in [0, pi/4]");
    const double rot = alpha_target - theta1;
    Eigen::Matrix2cd u;
    u << std::cos(rot), -std::sin(rot), std::sin(rot), std::cos(rot);
    GateSpec gate;
    gate.unitary = u;
    gate.name = "T";
    gate.params = {theta1, alpha_target};
    validate(gate);
    return gate;
}

std::vector<double> alpha_sequence(double alpha0, int length) {
    if (!(alpha0 >= 0.0 && alpha0 <= quarter_pi))
        throw AngleOutOfRange("alpha0 must lie in [0, pi/4]");
    if (length < 2)
        throw BadCounts("alpha sequence needs length >= 2");
    const double c = std::cos(2 * alpha0);
    std::vector<double> seq(static_cast<std::size_t>(length));
    double power = 1.0;
    for (int k = 0; k < length; ++k) {
        power *= c; // (cos 2 alpha0)^(k+1)
        seq[static_cast<std::size_t>(k)] = 0.5 * std::acos(clamp01(power));
    }
    return seq;
}

CircuitPlan build_circuit(int num_originals, int num_copies, double alpha0,
                          double theta, const Tolerances& tol) {
    if (num_originals < 1 || num_copies <= num_originals)
        throw BadCounts("need copies L > originals N >= 1");
    if (!(alpha0 > 0.0 && alpha0 < quarter_pi))
        throw AngleOutOfRange("alpha0 must lie in (0, pi/4)");
    if (!(theta >= 0.0 && theta <= quarter_pi))
        throw AngleOutOfRange("theta must lie in [0, pi/4]");
    const int extra = num_copies - num_originals;
    if (!(std::cos(2 * theta) > std::pow(std::cos(2 * alpha0), extra)))
        throw PerfectCloningRegime(
            "ancilla overlap at or below f^M: states sufficient for perfect "
            "cloning exist and the bound degenerates");

    CircuitPlan plan;
    plan.num_qubits = num_copies + 1;
    plan.alpha0 = alpha0;
    plan.theta = theta;
    plan.num_originals = num_originals;
    plan.num_copies = num_copies;
    plan.alpha_seq = alpha_sequence(alpha0, num_copies);

    const double alpha_n1 = plan.alpha_seq[static_cast<std::size_t>(num_originals - 1)];
    const double alpha_l1 = plan.alpha_seq[static_cast<std::size_t>(num_copies - 1)];
    plan.theta1 =
        0.5 * std::acos(clamp01(std::cos(2 * theta) * std::cos(2 * alpha_n1)));

    // Stage 1: concentrate the originals into qubit 1.
    for (int j = num_originals; j >= 2; --j) {
        GateSpec g = d_gate(alpha0, plan.alpha_seq[static_cast<std::size_t>(
                                        num_originals - j)]);
        g.targets = {j - 1, j};
        plan.gates.push_back(std::move(g));
    }

    // Stage 2: turned gate (register roles exchanged), then the rotation.
    GateSpec turned = d_gate(alpha_n1, theta);
    turned.name = "Dt";
    turned.targets = {1, 0};
    plan.gates.push_back(std::move(turned));

    GateSpec rot = t_gate(plan.theta1, alpha_l1);
    rot.targets = {1};
    plan.gates.push_back(std::move(rot));

    // Stage 3: distribute qubit 1 over all L clones.
    for (int k = 2; k <= num_copies; ++k) {
        GateSpec g = d_gate(alpha0, plan.alpha_seq[static_cast<std::size_t>(
                                        num_copies - k)]);
        g.targets = {k - 1, k};
        plan.gates.push_back(std::move(g));
    }

    for (const GateSpec& g : plan.gates)
        validate(g, tol);
    return plan;
}

double apply_gates(StateVector& state, const CircuitPlan& plan,
                   std::size_t first, std::size_t last) {
    double drift = 0.0;
    for (std::size_t i = first; i < last && i < plan.gates.size(); ++i) {
        const GateSpec& g = plan.gates[i];
        if (g.unitary.rows() == 2)
            state.apply_single(g.targets.at(0), g.unitary);
        else
            state.apply_two(g.targets.at(0), g.targets.at(1), g.unitary);
        drift = std::max(drift, std::abs(state.norm() - 1.0));
    }
    return drift;
}

CloneRunReport simulate_and_verify(const CircuitPlan& plan,
                                   const Tolerances& tol) {
    if (plan.num_qubits > tol.qubit_cap)
        throw RegisterTooLarge("plan register exceeds the statevector cap");

    const int n = plan.num_originals;
    const int l = plan.num_copies;
    const double f = std::cos(2 * plan.alpha0);
    const double phi = std::cos(2 * plan.theta);

    CloneRunReport rep;
    double deltas[2];
    std::vector<Complex> outputs[2];
    Complex run_states_inner{0.0, 0.0};
    StateVector clones[2] = {StateVector(1), StateVector(1)};

    for (int run = 0; run < 2; ++run) {
        const int sign = run == 0 ? +1 : -1;
        std::vector<Eigen::Vector2cd> qubits;
        qubits.push_back(real_qubit(plan.theta, sign)); // ancilla
        for (int p = 1; p <= n; ++p)
            qubits.push_back(real_qubit(plan.alpha0, sign));
        for (int p = n + 1; p <= l; ++p)
            qubits.push_back(Eigen::Vector2cd{1.0, 0.0});

        StateVector state = StateVector::product(qubits, tol);
        rep.max_norm_drift = std::max(
            rep.max_norm_drift, apply_gates(state, plan, 0, plan.gates.size()));

        double residual = 0.0;
        StateVector clone_register = state.drop_qubit(0, residual);
        rep.ancilla_residual = std::max(rep.ancilla_residual, residual);

        // Ideal output |phi_pm(alpha0)>^(x L)
        std::vector<Eigen::Vector2cd> ideal_qubits(
            static_cast<std::size_t>(l), real_qubit(plan.alpha0, sign));
        const StateVector ideal = StateVector::product(ideal_qubits, tol);
        deltas[run] = state_angle(ideal, clone_register);
        outputs[run] = clone_register.amplitudes();
        clones[run] = std::move(clone_register);
    }
    run_states_inner = clones[0].inner(clones[1]);

    rep.delta_plus = deltas[0];
    rep.delta_minus = deltas[1];
    rep.output_plus = std::move(outputs[0]);
    rep.output_minus = std::move(outputs[1]);

    const double sin_delta_l = std::sqrt(std::max(0.0, 1.0 - std::pow(f, 2 * l)));
    rep.achieved_r =
        (std::sin(rep.delta_plus) + std::sin(rep.delta_minus)) / sin_delta_l;
    rep.bound_r = bounds::two_state_bound(f, phi, 0.5, n, l).value;

    const double cos_delta = std::pow(f, l);
    const double cos_kappa = std::pow(f, n) * phi;
    const double sin_kappa = std::sqrt(std::max(0.0, 1.0 - cos_kappa * cos_kappa));
    rep.mu_minus = (sin_delta_l * cos_kappa - cos_delta * sin_kappa) / sin_delta_l;
    rep.nu_minus = sin_kappa / sin_delta_l;

    rep.overlap_out = run_states_inner.real();
    rep.overlap_expected = cos_kappa; // = cos 2 theta1
    rep.saturated = std::abs(rep.achieved_r - rep.bound_r) <= tol.saturation &&
                    rep.delta_plus <= 1e-9;
    return rep;
}

} // namespace clonebound::circuit
