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

#include "clonebound/json_io.hpp"

#include <fstream>

namespace clonebound::json_io {

namespace {

json real_matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json complex_list(const std::vector<std::complex<double>>& v) {
    json re = json::array(), im = json::array();
    for (const auto& c : v) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

} // namespace

json matrix_to_json(const qstate::CMatrix& m) {
    json j;
    j["dim"] = m.rows();
    json re = json::array(), im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json rrow = json::array(), irow = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rrow.push_back(m(r, c).real());
            irow.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

qstate::CMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") ||
        !j.contains("im"))
        throw ParseError("matrix object needs dim, re and im");
    const auto dim = j.at("dim").get<Eigen::Index>();
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (dim < 1 || static_cast<Eigen::Index>(re.size()) != dim ||
        static_cast<Eigen::Index>(im.size()) != dim)
        throw ParseError("matrix rows do not match dim");
    qstate::CMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        if (static_cast<Eigen::Index>(re.at(r).size()) != dim ||
            static_cast<Eigen::Index>(im.at(r).size()) != dim)
            throw ParseError("matrix columns do not match dim");
        for (Eigen::Index c = 0; c < dim; ++c)
            m(r, c) = {re.at(r).at(c).get<double>(),
                       im.at(r).at(c).get<double>()};
    }
    return m;
}

json to_json(const qstate::DensityOperator& rho) {
    return matrix_to_json(rho.matrix());
}

qstate::DensityOperator density_from_json(const json& j, const Tolerances& tol) {
    return qstate::make_density(matrix_from_json(j), tol);
}

json to_json(const bounds::CloningScenario& sc) {
    json j;
    json states = json::array();
    for (const auto& rho : sc.states)
        states.push_back(to_json(rho));
    j["states"] = std::move(states);
    j["priors"] = sc.priors;
    if (sc.ancillas) {
        json anc = json::array();
        for (const auto& ups : *sc.ancillas)
            anc.push_back(to_json(ups));
        j["ancillas"] = std::move(anc);
    } else {
        j["ancillas"] = nullptr;
    }
    j["N"] = sc.num_originals;
    j["L"] = sc.num_copies;
    return j;
}

bounds::CloningScenario scenario_from_json(const json& j, const Tolerances& tol) {
    if (!j.is_object())
        throw ParseError("scenario must be a JSON object");
    for (const char* key : {"states", "priors", "ancillas", "N", "L"})
        if (!j.contains(key))
            throw ParseError(std::string("scenario lacks key ") + key);

    bounds::CloningScenario sc;
    for (const json& s : j.at("states"))
        sc.states.push_back(density_from_json(s, tol));
    sc.priors = j.at("priors").get<std::vector<double>>();
    if (!j.at("ancillas").is_null()) {
        std::vector<qstate::DensityOperator> anc;
        for (const json& s : j.at("ancillas"))
            anc.push_back(density_from_json(s, tol));
        sc.ancillas = std::move(anc);
    }
    sc.num_originals = j.at("N").get<int>();
    sc.num_copies = j.at("L").get<int>();
    bounds::validate(sc, tol);
    return sc;
}

json to_json(const bounds::AngleReport& report) {
    return json{{"delta_N", real_matrix_to_json(report.delta_n)},
                {"delta_L", real_matrix_to_json(report.delta_l)},
                {"kappa", real_matrix_to_json(report.kappa)}};
}

json to_json(const bounds::CriteriaReport& report) {
    return json{{"max_P", report.max_p}, {"max_F", report.max_f},
                {"min_R", report.min_r}, {"min_A", report.min_a},
                {"f", report.overlap},   {"N", report.num_originals},
                {"L", report.num_copies}};
}

json to_json(const optimize::SimplexProgram& prog) {
    json pairs = json::array();
    for (int j = 0; j < prog.size; ++j)
        for (int k = j + 1; k < prog.size; ++k)
            pairs.push_back(json::array({j, k, prog.pair_bounds(j, k)}));
    std::vector<double> w(prog.weights.data(),
                          prog.weights.data() + prog.weights.size());
    return json{{"m", prog.size}, {"pair_bounds", std::move(pairs)},
                {"weights", std::move(w)}};
}

optimize::SimplexProgram program_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("pair_bounds") ||
        !j.contains("weights"))
        throw ParseError("program needs m, pair_bounds and weights");
    optimize::SimplexProgram prog;
    prog.size = j.at("m").get<int>();
    if (prog.size < 2)
        throw ParseError("program needs m >= 2");
    prog.pair_bounds = Eigen::MatrixXd::Zero(prog.size, prog.size);
    for (const json& entry : j.at("pair_bounds")) {
        if (!entry.is_array() || entry.size() != 3)
            throw ParseError("pair_bounds entries are [j, k, a]");
        const int a = entry.at(0).get<int>();
        const int b = entry.at(1).get<int>();
        if (a < 0 || b < 0 || a >= prog.size || b >= prog.size || a == b)
            throw ParseError("pair_bounds indices out of range");
        prog.pair_bounds(a, b) = prog.pair_bounds(b, a) =
            entry.at(2).get<double>();
    }
    const auto w = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(w.size()) != prog.size)
        throw ParseError("weights size does not match m");
    prog.weights = Eigen::Map<const Eigen::VectorXd>(w.data(), prog.size);
    optimize::validate(prog);
    return prog;
}

json to_json(const circuit::CircuitPlan& plan) {
    json gates = json::array();
    for (const auto& g : plan.gates)
        gates.push_back(json{{"name", g.name},
                             {"params", g.params},
                             {"targets", g.targets}});
    return json{{"num_qubits", plan.num_qubits},
                {"N", plan.num_originals},
                {"L", plan.num_copies},
                {"alpha0", plan.alpha0},
                {"theta", plan.theta},
                {"theta1", plan.theta1},
                {"alpha_seq", plan.alpha_seq},
                {"gates", std::move(gates)}};
}

json to_json(const circuit::CloneRunReport& report) {
    return json{{"delta_plus", report.delta_plus},
                {"delta_minus", report.delta_minus},
                {"achieved_R", report.achieved_r},
                {"bound_R", report.bound_r},
                {"mu_minus", report.mu_minus},
                {"nu_minus", report.nu_minus},
                {"ancilla_residual", report.ancilla_residual},
                {"max_norm_drift", report.max_norm_drift},
                {"overlap_out", report.overlap_out},
                {"overlap_expected", report.overlap_expected},
                {"saturated", report.saturated},
                {"output_plus", complex_list(report.output_plus)},
                {"output_minus", complex_list(report.output_minus)}};
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(e.what()) + " in " + path);
    }
}

} // namespace clonebound::json_io
