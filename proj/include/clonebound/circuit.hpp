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

/**
 * @file
 * The optimal two-pure-state cloning circuit and its verification.
 *
 * Register layout on L+1 qubits: qubit 0 is the ancilla, qubits 1..N hold
 * the originals |phi_pm(alpha0)>, qubits N+1..L start blank in |0>. The
 * circuit runs in three stages:
 *
 *   1. distinguishability concentration: D_j(alpha0, alpha_{N-j}) on
 *      (j-1, j) for j = N down to 2, ending with qubit 1 in
 *      |phi_pm(alpha_{N-1})> and qubits 2..N in |0>;
 *   2. ancilla merge and rotation: the turned gate D(alpha_{N-1}, theta)
 *      with its two roles exchanged absorbs the ancilla into qubit 1
 *      (angle theta_1), then the rotation T aligns |phi_+(theta_1)> with
 *      |phi_+(alpha_{L-1})>;
 *   3. distinguishability distribution: D_k(alpha0, alpha_{L-k}) on
 *      (k-1, k) for k = 2 up to L, fanning qubit 1 out to all L clones.
 *
 * The angle sequence obeys cos 2 alpha_k = (cos 2 alpha0)^(k+1).
 */

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clonebound/errors.hpp"
#include "clonebound/statevector.hpp"
#include "clonebound/tolerances.hpp"

namespace clonebound::circuit {

/// One dense unitary block. Targets are register positions; targets[0]
/// plays the first tensor-factor role of the matrix basis.
struct GateSpec {
    Eigen::MatrixXcd unitary;   ///< 2x2 or 4x4, U^dag U = I
    std::vector<int> targets;   ///< empty until bound to a register
    std::string name;           ///< "D", "Dt" or "T"
    std::vector<double> params; ///< constructing angles, radians
};

/// Throws InvariantViolation unless the block is unitary within tolerance
/// and the targets (when bound) are distinct and sized to the block.
void validate(const GateSpec& gate, const Tolerances& tol = Tolerances{});

/// Distinguishability transfer gate D(alpha, beta): the Hermitian involution
/// with
///   D |phi_pm(alpha)> (x) |phi_pm(beta)> = |phi_pm(gamma)> (x) |0>,
///   cos 2 gamma = cos 2 alpha cos 2 beta,
/// acting as the identity on the orthogonal complement of the four vectors
/// involved. alpha, beta in [0, pi/4] (AngleOutOfRange).
GateSpec d_gate(double alpha, double beta);

/// Rotation by (alpha_target - theta1) in the real plane: maps
/// |phi_+(theta1)> to |phi_+(alpha_target)> exactly, and |phi_-(theta1)> to
/// mu_- |phi_+(alpha_target)> + nu_- |phi_-(alpha_target)> with
/// mu_- = sin(Delta - kappa)/sin Delta, nu_- = sin kappa / sin Delta where
/// Delta = 2 alpha_target, kappa = 2 theta1.
/// Requires theta1 <= alpha_target (AngleOrderViolation).
GateSpec t_gate(double theta1, double alpha_target);

/// alpha_k = arccos((cos 2 alpha0)^(k+1)) / 2 for k = 0..length-1.
/// alpha0 in [0, pi/4], length >= 2.
std::vector<double> alpha_sequence(double alpha0, int length);

struct CircuitPlan {
    int num_qubits = 0; ///< L + 1
    std::vector<GateSpec> gates;
    double alpha0 = 0.0;
    double theta = 0.0;
    double theta1 = 0.0;
    int num_originals = 0; ///< N
    int num_copies = 0;    ///< L
    std::vector<double> alpha_seq; ///< alpha_0 .. alpha_{L-1}

    int stage1_count() const { return num_originals - 1; }
    int stage2_count() const { return 2; }
    int stage3_count() const { return num_copies - 1; }
};

/// Builds the three-stage plan. Requires 1 <= N < L (BadCounts), alpha0 in
/// (0, pi/4) and theta in [0, pi/4] (AngleOutOfRange), and
/// cos 2 theta > (cos 2 alpha0)^(L-N) — otherwise the ancilla could already
/// carry the clones and the bound degenerates (PerfectCloningRegime).
CircuitPlan build_circuit(int num_originals, int num_copies, double alpha0,
                          double theta, const Tolerances& tol = Tolerances{});

struct CloneRunReport {
    double delta_plus = 0.0;  ///< deviation angle of the "+" run, target 0
    double delta_minus = 0.0; ///< deviation angle of the "-" run
    double achieved_r = 0.0;  ///< relative error of the simulated outputs (p = 1/2)
    double bound_r = 0.0;     ///< two-state lower bound at p = 1/2
    double mu_minus = 0.0;
    double nu_minus = 0.0;
    std::vector<Complex> output_plus;  ///< clone-register statevector, L qubits
    std::vector<Complex> output_minus;
    double ancilla_residual = 0.0; ///< worst-case weight left outside |0>_ancilla
    double max_norm_drift = 0.0;   ///< worst |norm - 1| seen after any gate
    double overlap_out = 0.0;      ///< measured <Psi_+|Psi_->
    double overlap_expected = 0.0; ///< cos 2 theta1, preserved by every stage
    bool saturated = false;        ///< achieved_r meets bound_r within tolerance
};

/// Runs both inputs |phi_pm(theta)>_0 (x) |phi_pm(alpha0)>^N (x) |0>^M
/// through the plan and measures the deviation angles of the L-qubit clone
/// register against |phi_pm(alpha0)>^L.
/// Throws RegisterTooLarge when L+1 exceeds the qubit cap.
CloneRunReport simulate_and_verify(const CircuitPlan& plan,
                                   const Tolerances& tol = Tolerances{});

/// Applies gates [first, last) of the plan to a prepared register
/// (used to examine individual stages). Returns max |norm - 1| seen.
double apply_gates(StateVector& state, const CircuitPlan& plan,
                   std::size_t first, std::size_t last);

} // namespace clonebound::circuit
