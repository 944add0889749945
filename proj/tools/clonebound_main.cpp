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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "clonebound/cli.hpp"
#include "clonebound/qstate.hpp" // tolerances_from_env

namespace {

struct Options {
    clonebound::cli::RunConfig config;
    std::string format = "json";
    std::string sweep;
    std::string scenario;
};

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--N", opt.config.num_originals, "number of originals");
    cmd->add_option("--L", opt.config.num_copies, "number of copies, L > N");
    cmd->add_option("--alpha0", opt.config.alpha0,
                    "state half-angle, radians in (0, pi/4)");
    cmd->add_option("--theta", opt.config.theta,
                    "ancilla half-angle, radians in [0, pi/4]");
    cmd->add_option("--f", opt.config.overlap, "state overlap in [0, 1]");
    cmd->add_option("--phi", opt.config.ancilla_overlap,
                    "ancilla overlap in [0, 1]");
    cmd->add_option("--p-minus", opt.config.p_minus,
                    "smaller prior probability, in (0, 1/2]");
    cmd->add_option("--eps", opt.config.eps, "asymptotic offset, in (0, 1e-2]");
    cmd->add_option("--scenario", opt.scenario, "input JSON path");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--sweep", opt.sweep,
                    "parameter sweep as name:start:stop:steps");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative-error cloning bounds, criteria and circuit checks"};
    app.require_subcommand(1);

    Options opt;
    opt.config.tol = clonebound::tolerances_from_env();

    const std::map<std::string, clonebound::cli::Command> commands = {
        {"bound", clonebound::cli::Command::bound},
        {"criteria", clonebound::cli::Command::criteria},
        {"table1", clonebound::cli::Command::table1},
        {"simulate", clonebound::cli::Command::simulate},
        {"optimize", clonebound::cli::Command::optimize},
    };
    const std::map<std::string, std::string> descriptions = {
        {"bound", "two-state or multi-state lower bound on the relative error"},
        {"criteria", "the four optimality criteria for a pure-state pair"},
        {"table1", "criteria against their leading asymptotic expansions"},
        {"simulate", "build and verify the optimal cloning circuit"},
        {"optimize", "polytope minimum against the aggregate bound"},
    };
    for (const auto& [name, cmd] : commands)
        add_common_options(app.add_subcommand(name, descriptions.at(name)), opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    for (const auto& [name, cmd] : commands)
        if (app.get_subcommand(name)->parsed())
            opt.config.command = cmd;
    if (!opt.scenario.empty())
        opt.config.scenario_path = opt.scenario;
    opt.config.format = opt.format == "csv" ? clonebound::cli::Format::csv
                                            : clonebound::cli::Format::json;

    try {
        if (!opt.sweep.empty())
            opt.config.sweep = clonebound::cli::parse_sweep(opt.sweep);
    } catch (const clonebound::Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }

    return clonebound::cli::run(opt.config, std::cout, std::cerr);
}
