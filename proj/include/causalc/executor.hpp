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
//
// Dense simulation of spacetime circuits. The effective channel maps the
// joint input systems (input point declaration order) to the joint output
// systems (output point declaration order). It is computed by entangling
// every input with a mirror, pushing the circuit over the state, and
// reading the resulting (unnormalized) Choi operator off the mirrors.
//
// Standard circuits run their per-point channels in topological order.
// Scripted circuits are replayed step by step: teleportations draw keys
// from the seeded generator and imprint/undo the matching Pauli words, so
// any single trajectory reproduces the channel exactly; the Choi operator
// is therefore seed-independent, which tests assert.

#pragma once

#include "causalc/circuit.hpp"
#include "causalc/quantum.hpp"

namespace causalc {

struct SimOptions {
  unsigned long long seed = 1;
  // 0 replays port teleportation in its idealized form (exact relocation).
  // A positive value demonstrates the physical finite-port protocol with
  // that many ports per teleported qubit; the result is then only
  // approximate and the state must stay under the width cap with the
  // transient 2N resource qubits included.
  int physical_ports = 0;
};

struct SimResult {
  ChoiMatrix choi;
  QuantumChannel channel;  // Kraus form, legs = input/output systems
};

// Choi operator of the circuit's effective channel. Validates first.
ChoiMatrix effective_choi(const SpacetimeCircuit& circ,
                          const SimOptions& opts = {});

// Choi plus a Kraus presentation reconstructed from it.
SimResult effective_channel(const SpacetimeCircuit& circ,
                            const SimOptions& opts = {});

}  // namespace causalc
