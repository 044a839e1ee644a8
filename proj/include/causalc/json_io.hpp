// Copyright 2026 The causalc Authors
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

#pragma once

#include <string>

#include "json.hpp"

#include "causalc/circuit.hpp"
#include "causalc/compiler.hpp"
#include "causalc/task.hpp"

namespace causalc {

using Json = nlohmann::json;

// JSON forms of every value the command line reads or writes. All
// *_from_json functions throw ParseError with a description of what was
// malformed; they never half-construct. Matrices serialize as
// {"rows", "cols", "data": [[re, im], ...]} in row-major order.

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json spacetime_to_json(const Spacetime& s);
Spacetime spacetime_from_json(const Json& j);

Json label_to_json(const SystemLabel& l);
SystemLabel label_from_json(const Json& j);

Json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const Json& j);

Json script_to_json(const Script& s);
Script script_from_json(const Json& j);

Json circuit_to_json(const SpacetimeCircuit& c);
SpacetimeCircuit circuit_from_json(const Json& j);

Json task_to_json(const Task& t);
Task task_from_json(const Json& j);

Json choi_to_json(const ChoiMatrix& c);
ChoiMatrix choi_from_json(const Json& j);

Json resources_to_json(const ResourceReport& r);
ResourceReport resources_from_json(const Json& j);

// json::parse with failures rethrown as ParseError (byte offset included).
Json parse_json_text(const std::string& text);
// Reads and parses a file; ParseError names the path.
Json load_json_file(const std::string& path);

}  // namespace causalc
