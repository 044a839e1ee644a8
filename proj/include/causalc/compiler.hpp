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

#include "causalc/annotation.hpp"
#include "causalc/circuit.hpp"
#include "causalc/script.hpp"
#include "causalc/task.hpp"

namespace causalc {

// Teleportation traffic accounted while removing gates. Counted, not
// optimized: the construction trades locality for entanglement and the
// bill grows quickly with depth.
struct ResourceReport {
  int normal_teleports = 0;    // hops (a hop may carry several parcels)
  int port_teleports = 0;      // hops of the whole gathered bundle
  int max_port_depth = 0;      // deepest port-key nesting reached
  int bell_pairs_ideal = 0;    // qubits moved by normal teleports
  int classical_broadcasts = 0;  // key transmissions to output points
};

bool operator==(const ResourceReport& a, const ResourceReport& b);

// Outcome of absorbing one gate: the instruction list, the produced system
// (the gate's entire output set as one parcel, fully port-decrypted, parked
// at one root under the accumulated ordinary keys), and the traffic bill.
struct AbsorbResult {
  Script script;
  AnnotatedSystem result;
  ResourceReport resources;
  std::vector<std::string> trace;
};

// Replaces the named gate's local channel application with teleportation
// traffic confined to its roots: gather every incoming parcel at one root
// by ordinary teleports, port-teleport the bundle from key point to key
// point until every ordinary key is stripped, apply the gate's channel
// there (consuming its resident ancillas, which the caller must treat as
// re-anchored to the application point), then teleport back across the
// port-key points to strip those.
//
// `pre_encryption` optionally gives, per incoming edge in declaration
// order, the ordinary-key suffix the parcel arrives under; every key point
// must lie among the gate's roots (HypothesisViolated otherwise) and the
// first must be the edge's source point, since the emitted script realizes
// the declared encryption with explicit prologue teleports. Incoming edges
// must come from input points; gate-fed gates are handled by
// remove_all_gates, which absorbs predecessors first.
//
// Every emitted step is checked by the annotation layer as it is built, so
// a returned script satisfies the encryption calculus by construction.
AbsorbResult absorb_gate(
    const SpacetimeCircuit& circ, const std::string& gate,
    const std::vector<std::vector<std::string>>& pre_encryption = {});

// A compiled circuit plus the paperwork that proves it honest: the traffic
// bill and the step-by-step annotation renderings.
struct CompileResult {
  SpacetimeCircuit circuit;  // gate-free; carries the script
  ResourceReport resources;
  std::vector<std::string> trace;
};

// Removes every gate point. Gates are absorbed innermost-first: any gate
// all of whose feeding edges come from input points or already absorbed
// gates is eligible, and the lowest declaration index among eligible gates
// is chosen, so output is deterministic. Output-bound parcels leave the
// application point immediately, port-encrypted, with their keys broadcast
// to the destination; the remainder sheds its port keys on the way back.
//
// The result keeps only input and output points, carries one folded edge
// per ordered point pair that any payload or key crossed (width = payload
// qubits plus one promised-basis qubit per key broadcast), re-anchors gate
// ancillas at their application points, stores no per-point channels, and
// attaches the script. Its effective channel equals the original's.
CompileResult remove_all_gates(const SpacetimeCircuit& circ);

// Re-seats a gate-free circuit onto the task's points: same systems, edges,
// channels, and script, with every point reference renamed and relocated,
// inputs to inputs and outputs to outputs in declaration order. Requires
// the circuit's input/output precedence table to equal the task's
// (CoarseMismatch), which makes every re-seated edge causal, so the result
// validates on the task's spacetime and its effective channel is unchanged.
SpacetimeCircuit transfer(const SpacetimeCircuit& gate_free, const Task& onto);

}  // namespace causalc
