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
#include <vector>

#include "causalc/circuit.hpp"
#include "causalc/task.hpp"

namespace causalc {

// A bundled, deterministically seeded example. Everything random inside is
// drawn from fixed seeds, so repeated calls (and repeated builds) agree.
struct ExampleEntry {
  std::string name;
  std::string kind;  // "task" or "circuit"
  std::string summary;
};

std::vector<ExampleEntry> bundled_examples();

// Fetch a bundled example by name. The kind must match the entry's kind;
// asking for the wrong kind (or an unknown name) throws ResourceMissing.
Task example_task(const std::string& name);
SpacetimeCircuit example_circuit(const std::string& name);

// A two-gate circuit that carries out the delivery-on-demand task: a
// router gate forwards the parcel toward whichever station the flag qubits
// select. Compile it and re-seat the result onto example_task("summoning")
// or any task with the same coarse signature.
SpacetimeCircuit summoning_circuit();

// The task re-seated on a bare causal set: one element per task point,
// related exactly as the original points are. The discrete stand-in keeps
// the coarse structure and drops everything else. Points that precede each
// other both ways (co-located duplicates) cannot be modeled and raise
// CycleDetected.
Task causal_set_skeleton(const Task& original);

}  // namespace causalc
