// Copyright 2026 The qnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of the library's value types. Parsing failures throw
// Error(Errc::Parse); schema-valid input that violates a type invariant (e.g.
// a non-normalized state) throws the corresponding domain error.
//
//   state:      {"dim": d, "amps": [[re, im], ...]}
//   state set:  {"target": "not" | "conjugate", "states": [state, ...]}
//   machine:    {"system_dim", "probe_dim", "target", "unitary": [[[re, im], ...], ...],
//                "gammas", "phases", "fill_state"}

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qnot/feasibility.hpp"
#include "qnot/optimizer.hpp"
#include "qnot/simulator.hpp"
#include "qnot/states.hpp"
#include "qnot/synthesis.hpp"

namespace qnot::io {

using nlohmann::json;

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const QuditState& s);
json to_json(const StateSet& ss);
json to_json(const CMatrix& m);
json to_json(const Machine& m);
json to_json(const SynthesisReport& r);
json to_json(const FeasibilityVerdict& v);
json to_json(const SimulationReport& r);
json to_json(const GammaSearchResult& r);

QuditState state_from_json(const json& j);
StateSet state_set_from_json(const json& j);
CMatrix matrix_from_json(const json& j);
Machine machine_from_json(const json& j);

std::string_view target_name(TargetMap t) noexcept;
TargetMap target_from_name(std::string_view name);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace qnot::io
