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

#include "clonebound/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace clonebound::bounds {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// sqrt(F(rho_j, rho_k)) for every pair; tensor powers never materialize,
// the angles come out of fidelity multiplicativity.
Eigen::MatrixXd pair_overlaps(const CloningScenario& sc) {
    const int m = sc.set_size();
    Eigen::MatrixXd f = Eigen::MatrixXd::Ones(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            const double v =
                std::sqrt(clamp01(qstate::fidelity(sc.states[j], sc.states[k])));
            f(j, k) = f(k, j) = v;
        }
    return f;
}

Eigen::MatrixXd ancilla_overlaps(const CloningScenario& sc) {
    const int m = sc.set_size();
    Eigen::MatrixXd phi = Eigen::MatrixXd::Ones(m, m);
    if (!sc.ancillas)
        return phi; // identical ancillas carry no information
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            const double v = std::sqrt(
                clamp01(qstate::fidelity((*sc.ancillas)[j], (*sc.ancillas)[k])));
            phi(j, k) = phi(k, j) = v;
        }
    return phi;
}

double pair_fraction(const std::vector<double>& p, int j, int k) {
    double total = 0.0;
    const int m = static_cast<int>(p.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            total += p[a] * p[b];
    return p[j] * p[k] / total;
}

} // namespace

void validate(const CloningScenario& sc, const Tolerances& tol) {
    if (sc.set_size() < 2)
        throw InvariantViolation("scenario needs at least two states");
    const Eigen::Index n = sc.states.front().dim();
    for (const auto& rho : sc.states)
        if (rho.dim() != n)
            throw DimensionMismatch("scenario states of unequal dimension");
    if (sc.priors.size() != sc.states.size())
        throw BadProbabilities("one prior per state required");
    double sum = 0.0;
    for (double p : sc.priors) {
        if (!(p > 0.0))
            throw BadProbabilities("priors must be positive");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol.probability_sum)
        throw BadProbabilities("priors sum to " + std::to_string(sum));
    if (sc.ancillas) {
        if (sc.ancillas->size() != sc.states.size())
            throw DimensionMismatch("one ancilla state per input required");
        const Eigen::Index na = sc.ancillas->front().dim();
        for (const auto& ups : *sc.ancillas)
            if (ups.dim() != na)
                throw DimensionMismatch("ancilla states of unequal dimension");
    }
    if (sc.num_originals < 1 || sc.num_copies <= sc.num_originals)
        throw BadCounts("need copies L > originals N >= 1");
}

AngleReport pair_angles(const CloningScenario& sc, const Tolerances& tol) {
    validate(sc, tol);
    const int m = sc.set_size();
    const Eigen::MatrixXd f = pair_overlaps(sc);
    const Eigen::MatrixXd phi = ancilla_overlaps(sc);

    AngleReport rep;
    rep.delta_n = Eigen::MatrixXd::Zero(m, m);
    rep.delta_l = Eigen::MatrixXd::Zero(m, m);
    rep.kappa = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            const double fn = std::pow(f(j, k), sc.num_originals);
            const double fl = std::pow(f(j, k), sc.num_copies);
            rep.delta_n(j, k) = rep.delta_n(k, j) = std::acos(clamp01(fn));
            rep.delta_l(j, k) = rep.delta_l(k, j) = std::acos(clamp01(fl));
            rep.kappa(j, k) = rep.kappa(k, j) =
                std::acos(clamp01(fn * phi(j, k)));
        }
    return rep;
}

double relative_error(const CloningScenario& sc,
                      const std::vector<qstate::DensityOperator>& outputs,
                      const Tolerances& tol) {
    validate(sc, tol);
    const int m = sc.set_size();
    if (static_cast<int>(outputs.size()) != m)
        throw DimensionMismatch("one output per scenario state required");

    // Output deviations need the ideal tensor powers explicitly; this is the
    // small-instance cross-check path and respects the dimension cap.
    std::vector<double> dev(m);
    for (int j = 0; j < m; ++j) {
        const qstate::DensityOperator ideal =
            qstate::tensor_power(sc.states[j], sc.num_copies, tol);
        if (outputs[j].dim() != ideal.dim())
            throw DimensionMismatch("output dimension is not dim^L");
        const double fid = qstate::fidelity(outputs[j], ideal);
        dev[j] = std::sqrt(std::max(0.0, 1.0 - fid));
    }

    const Eigen::MatrixXd f = pair_overlaps(sc);
    double total = 0.0;
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            const double fl = std::pow(f(j, k), sc.num_copies);
            const double ideal_dist = std::sqrt(std::max(0.0, 1.0 - fl * fl));
            if (ideal_dist <= tol.degenerate_angle)
                throw DegeneratePair("identical ideal outputs for pair (" +
                                     std::to_string(j) + ", " +
                                     std::to_string(k) + ")");
            const double pj = sc.priors[j];
            const double pk = sc.priors[k];
            const double pair_error =
                2.0 * (pj * dev[j] + pk * dev[k]) / ((pj + pk) * ideal_dist);
            total += pair_fraction(sc.priors, j, k) * pair_error;
        }
    return total;
}

BoundResult two_state_bound(const CloningScenario& sc, const Tolerances& tol) {
    if (sc.set_size() != 2)
        throw TooManyStates("two-state bound needs exactly two states");
    const AngleReport rep = pair_angles(sc, tol);
    const double delta = rep.delta_l(0, 1);
    const double kappa = rep.kappa(0, 1);
    // indistinguishable ideal outputs: only the trivial bound remains
    if (kappa >= delta || std::sin(delta) <= tol.degenerate_angle)
        return {0.0, true};
    const double p_min = std::min(sc.priors[0], sc.priors[1]);
    return {2.0 * p_min * std::sin(delta - kappa) / std::sin(delta), false};
}

BoundResult two_state_bound(double overlap, double ancilla_overlap,
                            double p_minus, int num_originals, int num_copies) {
    if (!(overlap >= 0.0 && overlap <= 1.0) ||
        !(ancilla_overlap >= 0.0 && ancilla_overlap <= 1.0))
        throw BadProbabilities("overlaps must lie in [0, 1]");
    if (!(p_minus > 0.0 && p_minus <= 0.5))
        throw BadProbabilities("p_minus must lie in (0, 1/2]");
    if (num_originals < 1 || num_copies <= num_originals)
        throw BadCounts("need copies L > originals N >= 1");

    const double cos_kappa =
        std::pow(overlap, num_originals) * ancilla_overlap;
    const double cos_delta = std::pow(overlap, num_copies);
    if (cos_kappa <= cos_delta)
        return {0.0, true};
    const double sin_kappa = std::sqrt(std::max(0.0, 1.0 - cos_kappa * cos_kappa));
    const double sin_delta = std::sqrt(std::max(0.0, 1.0 - cos_delta * cos_delta));
    // sin(Delta - kappa)/sin(Delta) expanded; avoids the arccos round trip.
    return {2.0 * p_minus * (cos_kappa - cos_delta * sin_kappa / sin_delta),
            false};
}

double multi_state_bound(const CloningScenario& sc, const Tolerances& tol) {
    const AngleReport rep = pair_angles(sc, tol);
    const int m = sc.set_size();
    double total = 0.0;
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            const double delta = rep.delta_l(j, k);
            const double kappa = rep.kappa(j, k);
            if (kappa >= delta || std::sin(delta) <= tol.degenerate_angle)
                continue; // perfect cloning possible for this pair
            const double pj = sc.priors[j];
            const double pk = sc.priors[k];
            total += 2.0 * pair_fraction(sc.priors, j, k) *
                     (std::min(pj, pk) / (pj + pk)) *
                     (std::sin(delta - kappa) / std::sin(delta));
        }
    return total;
}

CriteriaReport criteria(double overlap, int num_originals, int num_copies) {
    if (!(overlap >= 0.0 && overlap <= 1.0))
        throw BadProbabilities("overlap must lie in [0, 1]");
    if (num_originals < 1 || num_copies <= num_originals)
        throw BadCounts("need copies L > originals N >= 1");

    CriteriaReport rep;
    rep.overlap = overlap;
    rep.num_originals = num_originals;
    rep.num_copies = num_copies;

    const double nn = num_originals;
    const double ll = num_copies;
    if (overlap == 1.0) {
        // identical states: analytic limits
        rep.max_p = nn / ll;
        rep.max_f = 1.0;
        rep.min_r = 1.0 - std::sqrt(nn / ll);
        rep.min_a = 0.0;
        return rep;
    }

    const double fn = std::pow(overlap, num_originals);
    const double fl = std::pow(overlap, num_copies);
    const double sn = std::sqrt(std::max(0.0, 1.0 - fn * fn));
    const double sl = std::sqrt(std::max(0.0, 1.0 - fl * fl));
    rep.max_p = (1.0 - fn) / (1.0 - fl);
    rep.max_f = (1.0 + fn * fl + sn * sl) / 2.0;
    rep.min_r = sl > 0.0 ? fn - fl * sn / sl : 0.0;
    rep.min_a = fn * sl - fl * sn;
    return rep;
}

std::vector<AsymptoticsRow> asymptotics_check(int num_originals, int num_copies,
                                              double eps) {
    if (!(eps > 0.0 && eps <= 1e-2))
        throw AngleOutOfRange("eps must lie in (0, 1e-2]");
    const double nn = num_originals;
    const double ll = num_copies;
    const CriteriaReport near_orth = criteria(eps, num_originals, num_copies);
    const CriteriaReport near_ident =
        criteria(1.0 - eps, num_originals, num_copies);

    std::vector<AsymptoticsRow> rows;
    auto push = [&rows](const char* criterion, const char* regime, double f,
                        double value, double prediction) {
        rows.push_back({criterion, regime, f, value, prediction,
                        std::abs(value - prediction)});
    };

    push("max_F", "orthogonal", eps, near_orth.max_f,
         1.0 - std::pow(eps, 2 * num_originals) / 4.0);
    push("min_A", "orthogonal", eps, near_orth.min_a, std::pow(eps, num_originals));
    push("min_R", "orthogonal", eps, near_orth.min_r, std::pow(eps, num_originals));
    push("max_P", "orthogonal", eps, near_orth.max_p,
         1.0 - std::pow(eps, num_originals));

    push("max_F", "identical", 1.0 - eps, near_ident.max_f,
         1.0 - std::pow(std::sqrt(ll) - std::sqrt(nn), 2) * eps / 2.0);
    push("min_A", "identical", 1.0 - eps, near_ident.min_a,
         (std::sqrt(2.0 * ll) - std::sqrt(2.0 * nn)) * std::sqrt(eps));
    push("min_R", "identical", 1.0 - eps, near_ident.min_r,
         1.0 - std::sqrt(nn / ll) + (std::sqrt(ll * nn) - nn) * eps);
    push("max_P", "identical", 1.0 - eps, near_ident.max_p,
         nn / ll - nn * (ll - nn) * eps / (2.0 * ll));
    return rows;
}

optimize::SimplexProgram simplex_program(const CloningScenario& sc,
                                         const Tolerances& tol) {
    const AngleReport rep = pair_angles(sc, tol);
    const int m = sc.set_size();

    optimize::SimplexProgram prog;
    prog.size = m;
    prog.pair_bounds = Eigen::MatrixXd::Zero(m, m);
    prog.weights = Eigen::VectorXd::Zero(m);
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            const double a = std::max(0.0, rep.delta_l(j, k) - rep.kappa(j, k));
            prog.pair_bounds(j, k) = prog.pair_bounds(k, j) = a;
        }
    for (int j = 0; j < m; ++j) {
        double r = 0.0;
        for (int k = 0; k < m; ++k) {
            if (k == j)
                continue;
            const double sin_delta = std::sin(rep.delta_l(j, k));
            if (sin_delta <= tol.degenerate_angle)
                throw DegeneratePair("identical ideal outputs for pair (" +
                                     std::to_string(j) + ", " +
                                     std::to_string(k) + ")");
            const int lo = std::min(j, k);
            const int hi = std::max(j, k);
            r += pair_fraction(sc.priors, lo, hi) /
                 ((sc.priors[j] + sc.priors[k]) * sin_delta);
        }
        prog.weights[j] = r * sc.priors[j];
    }
    return prog;
}

double sharpened_bound(const CloningScenario& sc, const Tolerances& tol) {
    const optimize::SimplexProgram prog = simplex_program(sc, tol);
    return 2.0 * optimize::simplex_min(prog, tol).value;
}

} // namespace clonebound::bounds
