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

#include "clonebound/cli.hpp"

#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "clonebound/bounds.hpp"
#include "clonebound/circuit.hpp"
#include "clonebound/json_io.hpp"

namespace clonebound::cli {

namespace {

using ordered = nlohmann::ordered_json;

// One report row. CSV carries the scalar fields; JSON additionally keeps
// nested detail objects (angle matrices, gate lists, output statevectors).
struct Row {
    ordered scalars;
    ordered detail;
};

std::string format_csv_value(const ordered& v) {
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
    return buf;
}

void write_csv(const std::vector<Row>& rows, std::ostream& out) {
    if (rows.empty())
        return;
    bool first = true;
    for (const auto& [key, value] : rows.front().scalars.items()) {
        (void)value;
        out << (first ? "" : ",") << key;
        first = false;
    }
    out << "\n";
    for (const Row& row : rows) {
        first = true;
        for (const auto& [key, value] : row.scalars.items()) {
            (void)key;
            out << (first ? "" : ",") << format_csv_value(value);
            first = false;
        }
        out << "\n";
    }
}

void write_json(const std::vector<Row>& rows, std::ostream& out) {
    auto merge = [](const Row& row) {
        ordered obj = row.scalars;
        for (const auto& [key, value] : row.detail.items())
            obj[key] = value;
        return obj;
    };
    if (rows.size() == 1) {
        out << merge(rows.front()).dump(2) << "\n";
        return;
    }
    ordered arr = ordered::array();
    for (const Row& row : rows)
        arr.push_back(merge(row));
    out << arr.dump(2) << "\n";
}

std::vector<double> sweep_values(const Sweep& sweep) {
    if (sweep.steps < 2)
        throw ParseError("sweep needs at least 2 steps");
    std::vector<double> vals(static_cast<std::size_t>(sweep.steps));
    for (int i = 0; i < sweep.steps; ++i)
        vals[static_cast<std::size_t>(i)] =
            sweep.start +
            (sweep.stop - sweep.start) * i / (sweep.steps - 1);
    return vals;
}

// Bind a sweep parameter to its config field; commands accept only the
// parameters that affect them.
RunConfig with_parameter(const RunConfig& base, const std::string& name,
                         double value) {
    RunConfig c = base;
    if (name == "f")
        c.overlap = value;
    else if (name == "phi")
        c.ancilla_overlap = value;
    else if (name == "p-minus")
        c.p_minus = value;
    else if (name == "alpha0")
        c.alpha0 = value;
    else if (name == "theta")
        c.theta = value;
    else if (name == "eps")
        c.eps = value;
    else
        throw ParseError("unknown sweep parameter " + name);
    return c;
}

void check_sweep_parameter(const Sweep& sweep,
                           std::initializer_list<const char*> allowed) {
    for (const char* name : allowed)
        if (sweep.parameter == name)
            return;
    throw ParseError("sweep over " + sweep.parameter +
                     " is not meaningful for this command");
}

// --- per-command row producers ------------------------------------------

std::vector<Row> rows_bound(const RunConfig& cfg) {
    if (cfg.scenario_path) {
        const json_io::json doc = json_io::parse_file(*cfg.scenario_path);
        const bounds::CloningScenario sc =
            json_io::scenario_from_json(doc, cfg.tol);
        Row row;
        row.scalars["command"] = "bound";
        row.scalars["m"] = sc.set_size();
        row.scalars["N"] = sc.num_originals;
        row.scalars["L"] = sc.num_copies;
        if (sc.set_size() == 2) {
            const bounds::BoundResult res = bounds::two_state_bound(sc, cfg.tol);
            row.scalars["value"] = res.value;
            row.scalars["perfect_cloning_possible"] = res.perfect_cloning_possible;
        } else {
            row.scalars["value"] = bounds::multi_state_bound(sc, cfg.tol);
            row.scalars["perfect_cloning_possible"] = false;
        }
        row.detail["angles"] = json_io::to_json(bounds::pair_angles(sc, cfg.tol));
        return {std::move(row)};
    }

    const bounds::BoundResult res =
        bounds::two_state_bound(cfg.overlap, cfg.ancilla_overlap, cfg.p_minus,
                                cfg.num_originals, cfg.num_copies);
    Row row;
    row.scalars["command"] = "bound";
    row.scalars["f"] = cfg.overlap;
    row.scalars["phi"] = cfg.ancilla_overlap;
    row.scalars["p_minus"] = cfg.p_minus;
    row.scalars["N"] = cfg.num_originals;
    row.scalars["L"] = cfg.num_copies;
    row.scalars["value"] = res.value;
    row.scalars["perfect_cloning_possible"] = res.perfect_cloning_possible;
    return {std::move(row)};
}

std::vector<Row> rows_criteria(const RunConfig& cfg) {
    const bounds::CriteriaReport rep =
        bounds::criteria(cfg.overlap, cfg.num_originals, cfg.num_copies);
    Row row;
    row.scalars["command"] = "criteria";
    const json_io::json rep_json = json_io::to_json(rep);
    for (const auto& [key, value] : rep_json.items())
        row.scalars[key] = value;
    return {std::move(row)};
}

std::vector<Row> rows_table1(const RunConfig& cfg) {
    std::vector<Row> rows;
    for (const bounds::AsymptoticsRow& r :
         bounds::asymptotics_check(cfg.num_originals, cfg.num_copies, cfg.eps)) {
        Row row;
        row.scalars["command"] = "table1";
        row.scalars["criterion"] = r.criterion;
        row.scalars["regime"] = r.regime;
        row.scalars["N"] = cfg.num_originals;
        row.scalars["L"] = cfg.num_copies;
        row.scalars["eps"] = cfg.eps;
        row.scalars["f"] = r.overlap;
        row.scalars["value"] = r.value;
        row.scalars["prediction"] = r.prediction;
        row.scalars["residual"] = r.residual;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Row> rows_simulate(const RunConfig& cfg, bool& invariant_ok) {
    const circuit::CircuitPlan plan =
        circuit::build_circuit(cfg.num_originals, cfg.num_copies, cfg.alpha0,
                               cfg.theta, cfg.tol);
    const circuit::CloneRunReport rep = circuit::simulate_and_verify(plan, cfg.tol);

    invariant_ok = invariant_ok && rep.saturated && rep.delta_plus <= 1e-9 &&
                   rep.achieved_r >= rep.bound_r - 1e-9;

    Row row;
    row.scalars["command"] = "simulate";
    row.scalars["N"] = cfg.num_originals;
    row.scalars["L"] = cfg.num_copies;
    row.scalars["alpha0"] = cfg.alpha0;
    row.scalars["theta"] = cfg.theta;
    row.scalars["theta1"] = plan.theta1;
    const json_io::json rep_json = json_io::to_json(rep);
    for (const char* key :
         {"delta_plus", "delta_minus", "achieved_R", "bound_R", "mu_minus",
          "nu_minus", "ancilla_residual", "max_norm_drift", "overlap_out",
          "overlap_expected", "saturated"})
        row.scalars[key] = rep_json.at(key);
    row.detail["plan"] = json_io::to_json(plan);
    row.detail["output_plus"] = rep_json.at("output_plus");
    row.detail["output_minus"] = rep_json.at("output_minus");
    return {std::move(row)};
}

std::vector<Row> rows_optimize(const RunConfig& cfg) {
    if (!cfg.scenario_path)
        throw ParseError("optimize needs --scenario (scenario or program JSON)");
    const json_io::json doc = json_io::parse_file(*cfg.scenario_path);

    Row row;
    row.scalars["command"] = "optimize";
    if (doc.contains("states")) {
        const bounds::CloningScenario sc =
            json_io::scenario_from_json(doc, cfg.tol);
        const optimize::SimplexProgram prog = bounds::simplex_program(sc, cfg.tol);
        const optimize::MinimizationResult min =
            optimize::simplex_min(prog, cfg.tol);
        row.scalars["m"] = sc.set_size();
        row.scalars["aggregate_bound"] = bounds::multi_state_bound(sc, cfg.tol);
        row.scalars["simplex_bound"] = 2.0 * min.value;
        for (std::size_t j = 0; j < min.argmin.size(); ++j)
            row.scalars["delta_" + std::to_string(j)] = min.argmin[j];
        row.detail["program"] = json_io::to_json(prog);
    } else {
        const optimize::SimplexProgram prog = json_io::program_from_json(doc);
        const optimize::MinimizationResult min =
            optimize::simplex_min(prog, cfg.tol);
        row.scalars["m"] = prog.size;
        row.scalars["minimum"] = min.value;
        for (std::size_t j = 0; j < min.argmin.size(); ++j)
            row.scalars["delta_" + std::to_string(j)] = min.argmin[j];
    }
    return {std::move(row)};
}

} // namespace

Sweep parse_sweep(const std::string& text) {
    Sweep sweep;
    std::istringstream in(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(in, part, ':'))
        parts.push_back(part);
    if (parts.size() != 4)
        throw ParseError("sweep format is name:start:stop:steps");
    sweep.parameter = parts[0];
    try {
        sweep.start = std::stod(parts[1]);
        sweep.stop = std::stod(parts[2]);
        sweep.steps = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw ParseError("sweep numbers unreadable in " + text);
    }
    if (sweep.steps < 2)
        throw ParseError("sweep needs at least 2 steps");
    return sweep;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        bool invariant_ok = true;
        std::vector<Row> rows;

        auto produce = [&](const RunConfig& cfg) {
            switch (cfg.command) {
            case Command::bound:
                return rows_bound(cfg);
            case Command::criteria:
                return rows_criteria(cfg);
            case Command::table1:
                return rows_table1(cfg);
            case Command::simulate:
                return rows_simulate(cfg, invariant_ok);
            case Command::optimize:
                return rows_optimize(cfg);
            }
            throw ParseError("unknown command");
        };

        if (config.sweep) {
            switch (config.command) {
            case Command::bound:
                if (config.scenario_path)
                    throw ParseError("sweep requires the closed-form bound");
                check_sweep_parameter(*config.sweep, {"f", "phi", "p-minus"});
                break;
            case Command::criteria:
                check_sweep_parameter(*config.sweep, {"f"});
                break;
            case Command::table1:
                check_sweep_parameter(*config.sweep, {"eps"});
                break;
            case Command::simulate:
                check_sweep_parameter(*config.sweep, {"alpha0", "theta"});
                break;
            case Command::optimize:
                throw ParseError("optimize does not sweep");
            }
            for (double v : sweep_values(*config.sweep)) {
                std::vector<Row> part =
                    produce(with_parameter(config, config.sweep->parameter, v));
                for (Row& row : part)
                    rows.push_back(std::move(row));
            }
        } else {
            rows = produce(config);
        }

        if (config.format == Format::csv)
            write_csv(rows, out);
        else
            write_json(rows, out);

        if (!invariant_ok) {
            err << "invariant violation: simulated run misses a required "
                   "property (see report)\n";
            return 2;
        }
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        // well-formed JSON of the wrong shape (missing keys, wrong types)
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace clonebound::cli
