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
 * Relative error of state-dependent cloning, its lower bounds for two-state
 * and multi-state sets, and the competing optimality criteria.
 *
 * Conventions: a scenario clones N originals of one of m states rho_j (prior
 * p_j) into L > N copies, aided by an ancilla whose state Upsilon_j may
 * depend on j. Pairwise angles:
 *   Delta^(N)_jk = arccos sqrt(F(rho_j, rho_k)^N)      (tensor powers via
 *   Delta^(L)_jk = arccos sqrt(F(rho_j, rho_k)^L)       multiplicativity)
 *   kappa_jk     = arccos sqrt(F(rho_j, rho_k)^N F(Upsilon_j, Upsilon_k)).
 * Absent ancilla information means F(Upsilon_j, Upsilon_k) = 1.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clonebound/optimize.hpp"
#include "clonebound/qstate.hpp"
#include "clonebound/tolerances.hpp"

namespace clonebound::bounds {

struct CloningScenario {
    std::vector<qstate::DensityOperator> states;  ///< m operators of equal dimension
    std::vector<double> priors;                   ///< positive, sum to 1
    /// One ancilla state per input state; absent means no a-priori information.
    std::optional<std::vector<qstate::DensityOperator>> ancillas;
    int num_originals = 1; ///< N
    int num_copies = 2;    ///< L > N

    int set_size() const { return static_cast<int>(states.size()); }
    Eigen::Index dim() const { return states.front().dim(); }
};

/// Throws on violated scenario invariants (m >= 2, equal dims, priors
/// positive and normalized, L > N >= 1).
void validate(const CloningScenario& sc, const Tolerances& tol = Tolerances{});

/// Symmetric zero-diagonal matrices of pairwise angles.
struct AngleReport {
    Eigen::MatrixXd delta_n;
    Eigen::MatrixXd delta_l;
    Eigen::MatrixXd kappa;
};

AngleReport pair_angles(const CloningScenario& sc,
                        const Tolerances& tol = Tolerances{});

/// Relative error of the actual outputs against the ideal ones,
///
///   R = sum_{j<k} q_jk * 2 (p_j d_j + p_k d_k) / ((p_j + p_k) d_jk),
///
/// with d_j the sine distance of output j to rho_j^(x L), d_jk the sine
/// distance between the ideal outputs, and q_jk = p_j p_k / sum p_j p_k.
/// outputs[j] is the clone-register state, dimension dim^L.
/// Throws DegeneratePair when some pair of ideal outputs coincides.
double relative_error(const CloningScenario& sc,
                      const std::vector<qstate::DensityOperator>& outputs,
                      const Tolerances& tol = Tolerances{});

struct BoundResult {
    double value = 0.0;
    /// Set when kappa >= Delta^(L): the ancilla already carries enough
    /// information for perfect cloning and only the trivial bound remains.
    bool perfect_cloning_possible = false;
};

/// Two-state lower bound  2 min(p+, p-) sin(Delta^(L) - kappa) / sin Delta^(L).
BoundResult two_state_bound(const CloningScenario& sc,
                            const Tolerances& tol = Tolerances{});

/// Pure-state closed form of the same bound, from the overlap f of the two
/// states and the ancilla overlap phi: cos kappa = f^N phi, cos Delta = f^L.
/// p_minus is the smaller prior, in (0, 1/2].
BoundResult two_state_bound(double overlap, double ancilla_overlap,
                            double p_minus, int num_originals, int num_copies);

/// Multi-state lower bound; pairs with kappa_jk >= Delta^(L)_jk contribute 0.
double multi_state_bound(const CloningScenario& sc,
                         const Tolerances& tol = Tolerances{});

/// The four criteria for cloning two equiprobable pure states with overlap f
/// and no ancilla information.
struct CriteriaReport {
    double max_p = 1.0; ///< best success probability of probabilistic exact cloning
    double max_f = 1.0; ///< best global fidelity of deterministic cloning
    double min_r = 0.0; ///< least relative error
    double min_a = 0.0; ///< least absolute error
    double overlap = 0.0;
    int num_originals = 1;
    int num_copies = 2;
};

/// f = 1 is handled by the analytic limits (max_p -> N/L, max_f -> 1,
/// min_r -> 1 - sqrt(N/L), min_a -> 0).
CriteriaReport criteria(double overlap, int num_originals, int num_copies);

/// One row of the asymptotic comparison: a criterion evaluated at f = eps
/// (regime "orthogonal") or f = 1 - eps (regime "identical") next to its
/// leading-order prediction.
struct AsymptoticsRow {
    std::string criterion; ///< "max_F", "min_A", "min_R" or "max_P"
    std::string regime;    ///< "orthogonal" or "identical"
    double overlap = 0.0;
    double value = 0.0;
    double prediction = 0.0;
    double residual = 0.0;
};

/// Eight rows (4 criteria x 2 regimes). Requires 0 < eps <= 1e-2.
std::vector<AsymptoticsRow> asymptotics_check(int num_originals,
                                              int num_copies, double eps);

/// The deviation-polytope program whose minimum sharpens the multi-state
/// bound: weights w_j = p_j sum_{k != j} q_jk / ((p_j + p_k) sin Delta^(L)_jk)
/// and pair bounds a_jk = max(0, Delta^(L)_jk - kappa_jk). The relative error
/// equals 2 sum_j w_j sin(d_j) over the polytope.
optimize::SimplexProgram simplex_program(const CloningScenario& sc,
                                         const Tolerances& tol = Tolerances{});

/// 2 x the exact polytope minimum; never below multi_state_bound.
double sharpened_bound(const CloningScenario& sc,
                       const Tolerances& tol = Tolerances{});

} // namespace clonebound::bounds
