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

#include "clonebound/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "clonebound/kernels.hpp"

namespace clonebound::optimize {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

} // namespace

void validate(const SimplexProgram& prog) {
    if (prog.size < 2)
        throw InvariantViolation("simplex program needs size >= 2");
    if (prog.pair_bounds.rows() != prog.size ||
        prog.pair_bounds.cols() != prog.size ||
        prog.weights.size() != prog.size)
        throw InvariantViolation("simplex program shapes inconsistent with size");
    for (int j = 0; j < prog.size; ++j) {
        if (prog.weights[j] < 0.0)
            throw BadProbabilities("negative weight");
        for (int k = 0; k < prog.size; ++k) {
            const double a = prog.pair_bounds(j, k);
            if (a < 0.0 || a > half_pi + 1e-12)
                throw AngleOutOfRange("pair bound outside [0, pi/2]");
            if (std::abs(a - prog.pair_bounds(k, j)) > 1e-12)
                throw AngleOutOfRange("pair bounds not symmetric");
        }
        if (prog.pair_bounds(j, j) != 0.0)
            throw AngleOutOfRange("pair bounds diagonal must be zero");
    }
}

MinimizationResult pair_sine_min(double p, double q, double a) {
    if (!(p > 0.0) || !(q > 0.0) || std::abs(p + q - 1.0) > 1e-9)
        throw BadProbabilities("need p, q > 0 with p + q = 1");
    if (!(a >= 0.0 && a <= half_pi))
        throw AngleOutOfRange("a outside [0, pi/2]");
    MinimizationResult r;
    r.value = std::min(p, q) * std::sin(a);
    // The whole deviation lands on the lower-weight coordinate; p = q
    // resolves to (0, a).
    r.argmin = p < q ? std::vector<double>{a, 0.0} : std::vector<double>{0.0, a};
    return r;
}

// ---------------------------------------------------------------------------
// Vertex enumeration. Constraints, as equalities at a vertex:
//   d_j = 0, d_j = pi/2 (2m box constraints), d_j + d_k = a_jk (pairs).
// A vertex solves some nonsingular m-subset; we enumerate subsets whose
// variable coverage can still reach all m variables, solve, filter for
// feasibility, and keep the best objective value.
// ---------------------------------------------------------------------------

namespace {

struct VertexConstraint {
    int var_a = -1;
    int var_b = -1; // -1 for box constraints
    double rhs = 0.0;
};

struct VertexSearch {
    static constexpr int max_size = 8;

    const SimplexProgram& prog;
    const Tolerances& tol;
    std::vector<VertexConstraint> constraints;
    std::vector<int> chosen;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_point;

    explicit VertexSearch(const SimplexProgram& p, const Tolerances& t)
        : prog(p), tol(t) {
        const int m = prog.size;
        for (int j = 0; j < m; ++j)
            constraints.push_back({j, -1, 0.0});
        for (int j = 0; j < m; ++j)
            constraints.push_back({j, -1, half_pi});
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                constraints.push_back({j, k, prog.pair_bounds(j, k)});
    }

    bool feasible(const double* x) const {
        const int m = prog.size;
        for (int j = 0; j < m; ++j)
            if (x[j] < -tol.feasibility || x[j] > half_pi + tol.feasibility)
                return false;
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                if (x[j] + x[k] < prog.pair_bounds(j, k) - tol.feasibility)
                    return false;
        return true;
    }

    bool lex_less(const double* x, const std::vector<double>& y) const {
        for (int j = 0; j < prog.size; ++j) {
            if (x[j] < y[j] - 1e-12)
                return true;
            if (x[j] > y[j] + 1e-12)
                return false;
        }
        return false;
    }

    // Solve the m x m active-set system in place. Rows hold at most two
    // ones, so elimination stays exact up to roundoff and a pivot below
    // 1e-9 can only mean a rank-deficient set.
    void try_active_set() {
        const int m = prog.size;
        double a[max_size][max_size + 1] = {};
        for (int r = 0; r < m; ++r) {
            const VertexConstraint& c = constraints[chosen[r]];
            a[r][c.var_a] = 1.0;
            if (c.var_b >= 0)
                a[r][c.var_b] = 1.0;
            a[r][m] = c.rhs;
        }
        for (int col = 0; col < m; ++col) {
            int pivot = col;
            for (int r = col + 1; r < m; ++r)
                if (std::abs(a[r][col]) > std::abs(a[pivot][col]))
                    pivot = r;
            if (std::abs(a[pivot][col]) < 1e-9)
                return; // rank-deficient: some nonsingular set generates it
            if (pivot != col)
                for (int c = col; c <= m; ++c)
                    std::swap(a[pivot][c], a[col][c]);
            const double inv = 1.0 / a[col][col];
            for (int r = col + 1; r < m; ++r) {
                const double factor = a[r][col] * inv;
                if (factor == 0.0)
                    continue;
                for (int c = col; c <= m; ++c)
                    a[r][c] -= factor * a[col][c];
            }
        }
        double x[max_size];
        for (int r = m - 1; r >= 0; --r) {
            double s = a[r][m];
            for (int c = r + 1; c < m; ++c)
                s -= a[r][c] * x[c];
            x[r] = s / a[r][r];
        }
        if (!feasible(x))
            return;
        double value = 0.0;
        for (int j = 0; j < m; ++j)
            value += prog.weights[j] * std::sin(std::clamp(x[j], 0.0, half_pi));
        if (value < best_value - 1e-12 ||
            (std::abs(value - best_value) <= 1e-12 &&
             (best_point.empty() || lex_less(x, best_point)))) {
            best_value = value;
            best_point.assign(x, x + m);
        }
    }

    // Depth-first subset choice; prune branches that cannot cover all
    // variables (each constraint touches at most two).
    void recurse(std::size_t next, int covered_count, unsigned covered_mask) {
        const int m = prog.size;
        const int remaining = m - static_cast<int>(chosen.size());
        if (remaining == 0) {
            if (covered_count == m)
                try_active_set();
            return;
        }
        if (m - covered_count > 2 * remaining)
            return;
        if (constraints.size() - next < static_cast<std::size_t>(remaining))
            return;
        for (std::size_t i = next; i < constraints.size(); ++i) {
            const VertexConstraint& c = constraints[i];
            unsigned mask = covered_mask | (1u << c.var_a);
            if (c.var_b >= 0)
                mask |= 1u << c.var_b;
            chosen.push_back(static_cast<int>(i));
            recurse(i + 1, std::popcount(mask), mask);
            chosen.pop_back();
        }
    }
};

} // namespace

MinimizationResult simplex_min(const SimplexProgram& prog, const Tolerances& tol) {
    validate(prog);
    if (prog.size > 8)
        throw TooManyStates("vertex enumeration limited to 8 variables");

    VertexSearch search(prog, tol);
    search.recurse(0, 0, 0u);

    MinimizationResult r;
    r.value = search.best_value;
    r.argmin = std::move(search.best_point);
    return r;
}

// ---------------------------------------------------------------------------
// Grid oracle. Feasibility of a grid point only ever tightens when a
// coordinate grows, and the objective is nondecreasing in each coordinate,
// so the scan resolves the last coordinate analytically: for a fixed prefix
// it takes the smallest grid value above every pair-induced floor. The
// result equals the full nested scan point for point.
// ---------------------------------------------------------------------------

namespace {

struct Grid {
    std::vector<double> value; // 0, step, ..., pi/2
    std::vector<double> sine;

    explicit Grid(double step) {
        const std::size_t last = static_cast<std::size_t>(std::ceil(half_pi / step));
        value.resize(last + 1);
        sine.resize(last + 1);
        for (std::size_t i = 0; i <= last; ++i) {
            value[i] = std::min(static_cast<double>(i) * step, half_pi);
            sine[i] = std::sin(value[i]);
        }
    }

    // Smallest index j with partner + value[j] >= bound, evaluating the
    // constraint in exactly that sum form so the reduced scan agrees with a
    // plain nested scan to the ulp. Arithmetic guess, local adjustment.
    std::size_t sum_ceil_index(double bound, double partner) const {
        const double step = value[1];
        const std::size_t last = value.size() - 1;
        const double gap = bound - partner;
        std::size_t j = gap <= 0.0
                            ? 0
                            : std::min(last, static_cast<std::size_t>(
                                                 std::floor(gap / step)));
        while (j > 0 && partner + value[j - 1] >= bound)
            --j;
        while (j < last && partner + value[j] < bound)
            ++j;
        return j;
    }
};

// Minimum of w_a sin(d_a) + w_b sin(d_b) over grid points with index floors
// ia_min, jb_min (from constraints against already-fixed coordinates) and
// the mutual bound d_a + d_b >= a.
double scan_pair(const Grid& g, std::size_t ia_min, std::size_t jb_min,
                 double a, double w_a, double w_b,
                 std::vector<double>& partner_sine) {
    const std::size_t last = g.value.size() - 1;
    partner_sine.clear();
    for (std::size_t i = ia_min; i <= last; ++i) {
        const std::size_t j =
            std::max(jb_min, g.sum_ceil_index(a, g.value[i]));
        partner_sine.push_back(g.sine[j]);
    }
    return kernels::min_affine_pair(g.sine.data() + ia_min, partner_sine.data(),
                                    w_a, w_b, partner_sine.size());
}

} // namespace

double grid_oracle(const SimplexProgram& prog, double step) {
    validate(prog);
    if (prog.size > 4)
        throw TooManyStates("grid oracle limited to 4 variables");
    if (!(step > 0.0))
        throw AngleOutOfRange("grid step must be positive");

    const Grid g(step);
    const int m = prog.size;
    const Eigen::MatrixXd& a = prog.pair_bounds;
    const Eigen::VectorXd& w = prog.weights;
    std::vector<double> partner;
    double best = std::numeric_limits<double>::infinity();

    if (m == 2)
        return scan_pair(g, 0, 0, a(0, 1), w[0], w[1], partner);

    if (m == 3) {
        for (std::size_t i = 0; i < g.value.size(); ++i) {
            const double d0 = g.value[i];
            const double inner = scan_pair(g, g.sum_ceil_index(a(0, 1), d0),
                                           g.sum_ceil_index(a(0, 2), d0),
                                           a(1, 2), w[1], w[2], partner);
            best = std::min(best, w[0] * g.sine[i] + inner);
        }
        return best;
    }

    for (std::size_t i = 0; i < g.value.size(); ++i) {
        const double d0 = g.value[i];
        const std::size_t j_start = g.sum_ceil_index(a(0, 1), d0);
        const std::size_t floor_c0 = g.sum_ceil_index(a(0, 2), d0);
        const std::size_t floor_d0 = g.sum_ceil_index(a(0, 3), d0);
        for (std::size_t j = j_start; j < g.value.size(); ++j) {
            const double d1 = g.value[j];
            const std::size_t floor_c =
                std::max(floor_c0, g.sum_ceil_index(a(1, 2), d1));
            const std::size_t floor_d =
                std::max(floor_d0, g.sum_ceil_index(a(1, 3), d1));
            const double inner =
                scan_pair(g, floor_c, floor_d, a(2, 3), w[2], w[3], partner);
            best = std::min(best, w[0] * g.sine[i] + w[1] * g.sine[j] + inner);
        }
    }
    return best;
}

} // namespace clonebound::optimize
