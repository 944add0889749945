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

#include <json.hpp>

#include "clonebound/bounds.hpp"
#include "clonebound/circuit.hpp"
#include "clonebound/optimize.hpp"
#include "clonebound/qstate.hpp"

// JSON wire formats. Matrices travel as {"dim": n, "re": [[..]], "im": [[..]]};
// scenarios as {"states": [...], "priors": [...], "ancillas": [...]|null,
// "N": int, "L": int}; simplex programs as {"m": int,
// "pair_bounds": [[j, k, a], ...], "weights": [...]}.
// Malformed documents raise ParseError, documents that parse but violate a
// type invariant surface the underlying validation error.

namespace clonebound::json_io {

using nlohmann::json;

json matrix_to_json(const qstate::CMatrix& m);
qstate::CMatrix matrix_from_json(const json& j);

json to_json(const qstate::DensityOperator& rho);
qstate::DensityOperator density_from_json(const json& j,
                                          const Tolerances& tol = Tolerances{});

json to_json(const bounds::CloningScenario& sc);
bounds::CloningScenario scenario_from_json(const json& j,
                                           const Tolerances& tol = Tolerances{});

json to_json(const bounds::AngleReport& report);
json to_json(const bounds::CriteriaReport& report);

json to_json(const optimize::SimplexProgram& prog);
optimize::SimplexProgram program_from_json(const json& j);

json to_json(const circuit::CircuitPlan& plan);
json to_json(const circuit::CloneRunReport& report);

/// Parses a whole document, mapping parse failures to ParseError.
json parse(const std::string& text);
json parse_file(const std::string& path);

} // namespace clonebound::json_io
