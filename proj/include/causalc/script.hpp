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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causalc/quantum.hpp"

namespace causalc {

struct SpacetimeCircuit;

// One primitive instruction of a teleportation protocol. Scripts are the
// explicit record of how a compiled circuit realizes its channel: agents at
// the input and output points execute the steps in order.
//
// Operands are named systems (quantum parcels tracked by the annotation
// layer). Step kinds and their operands:
//   NormalTeleport  systems, from, to   Bell teleport; keys stay at `from`
//   PortTeleport    systems, from, to   port teleport of the whole bundle
//   NormalDecrypt   systems[0], point   undo the Pauli keyed at `point`
//   PortDecrypt     systems[0], point   select the port keyed at `point`
//   ApplyChannel    systems, point, channel, result
//                                       joint channel on the listed systems
//                                       (plus any ancilla resident at point)
//   Merge           systems = {a, b}, result
//   Split           systems[0], parts   partition a system's legs
//   SendPlain       systems, from, to   unencrypted physical send
//   EmitOutput      systems[0], point   declare an output system final
struct ScriptStep {
  enum class Kind {
    NormalTeleport,
    PortTeleport,
    NormalDecrypt,
    PortDecrypt,
    ApplyChannel,
    Merge,
    Split,
    SendPlain,
    EmitOutput,
  };

  Kind kind = Kind::NormalTeleport;
  std::vector<std::string> systems;
  std::string from, to;
  std::string point;
  std::string result;
  // Split: (new system id, leg ids) per part, covering the operand exactly.
  std::vector<std::pair<std::string, std::vector<std::string>>> parts;
  std::optional<QuantumChannel> channel;
};

const char* script_step_kind_name(ScriptStep::Kind kind);

struct Script {
  std::vector<ScriptStep> steps;
};

// Replays the script against the circuit at the annotation layer, enforcing
// the encryption calculus (last-in-first-out normal decryption, decryption
// only in the causal future of the key, no operations under normal
// encryption, no merging under port encryption), location coherence of every
// step, causality of plain sends, and that the steps consume exactly the
// circuit's input systems and emit exactly its output systems. Throws
// InvalidScript or the specific calculus error on violation.
void validate_script(const SpacetimeCircuit& circ);

}  // namespace causalc
