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
 * Concave sine-sum minimization over the deviation polytope
 *
 *   minimize   sum_j w_j sin(d_j)
 *   subject to d_j + d_k >= a_jk  for all j < k,   0 <= d_j <= pi/2.
 *
 * The objective is concave on the box, so the minimum sits on a vertex;
 * simplex_min enumerates vertices exactly. grid_oracle is the independent
 * brute-force check. The point (pi/2, ..., pi/2) is always feasible.
 */

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "clonebound/errors.hpp"
#include "clonebound/tolerances.hpp"

namespace clonebound::optimize {

struct SimplexProgram {
    int size = 0;                ///< number of variables m >= 2
    Eigen::MatrixXd pair_bounds; ///< m x m symmetric, zero diagonal, entries in [0, pi/2]
    Eigen::VectorXd weights;     ///< m nonnegative weights
};

/// Throws BadProbabilities / AngleOutOfRange / TooManyStates on a malformed
/// program (weights negative, bounds outside [0, pi/2], size < 2).
void validate(const SimplexProgram& prog);

struct MinimizationResult {
    double value = 0.0;
    std::vector<double> argmin;
};

/// Global minimum of p sin(x) + q sin(y) over x + y >= a within the
/// [0, pi/2] box: min(p, q) * sin(a). The lower-weight coordinate carries
/// the whole deviation; ties go to (0, a).
/// Requires p, q > 0 with p + q = 1 (BadProbabilities) and a in [0, pi/2]
/// (AngleOutOfRange).
MinimizationResult pair_sine_min(double p, double q, double a);

/// Exact minimum by enumerating polytope vertices (all nonsingular
/// active sets of m constraints, filtered for feasibility). Ties in the
/// objective resolve to the lexicographically smallest vertex.
/// Requires size <= 8 (TooManyStates); rank-deficient active sets are
/// skipped silently.
MinimizationResult simplex_min(const SimplexProgram& prog,
                               const Tolerances& tol = Tolerances{});

/// Exhaustive minimum over the feasible points of the uniform grid
/// {0, step, 2 step, ..., pi/2}. Upper-bounds the true minimum within the
/// Lipschitz error sum(w_j) * step. Requires size <= 4 (TooManyStates).
///
/// The innermost coordinate is resolved analytically: the objective is
/// nondecreasing in each variable, so for a fixed prefix the best grid
/// value of the last coordinate is the smallest feasible one. The result
/// is identical to the full nested scan.
double grid_oracle(const SimplexProgram& prog, double step);

} // namespace clonebound::optimize
