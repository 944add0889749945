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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "clonebound/tolerances.hpp"

namespace clonebound::cli {

enum class Command { bound, criteria, table1, simulate, optimize };
enum class Format { json, csv };

struct Sweep {
    std::string parameter; ///< one of f, phi, p-minus, alpha0, theta, eps
    double start = 0.0;
    double stop = 0.0;
    int steps = 2; ///< >= 2, endpoints included
};

struct RunConfig {
    Command command = Command::criteria;
    std::optional<std::string> scenario_path;
    Format format = Format::json;
    std::optional<Sweep> sweep;
    Tolerances tol{};

    double overlap = 0.0;      // --f
    double ancilla_overlap = 1.0; // --phi
    double p_minus = 0.5;      // --p-minus
    int num_originals = 1;     // --N
    int num_copies = 2;        // --L
    double alpha0 = 0.0;       // --alpha0
    double theta = 0.0;        // --theta
    double eps = 1e-3;         // --eps
};

/// Executes one command, writing the report to `out` and diagnostics to
/// `err`. Returns 0 on success, 1 on parse errors (malformed JSON or sweep),
/// 2 on invariant violations (scenario validation, domain errors, or a
/// simulation that breaks a run invariant).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses "name:start:stop:steps". Throws ParseError.
Sweep parse_sweep(const std::string& text);

} // namespace clonebound::cli
