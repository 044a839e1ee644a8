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

namespace causalc {

// Exact entanglement fidelity of single-qubit port-based teleportation over
// N maximally entangled ports with the square-root measurement.
//
// The computation never touches the 2^(N+1)-dimensional sender space.
// Writing sigma_i for the outcome operators, the fidelity is
// (N/4) tr[s^(-1/2) sigma_1 s^(-1/2) sigma_1] with s their sum (kernel
// omitted; it carries no outcome weight). Conjugating the payload qubit by
// Pauli-Y turns each sigma_i into a singlet projector between the payload
// and port i, so s becomes N/4 - S0.S' with S' the total port spin. That
// operator is a scalar under joint rotations and blind to which spectator
// ports carry the spin, so the trace splits over (spectator spin s'',
// total j) sectors of dimension at most two, weighted by the standard
// multiplicities. Each sector block is built numerically from spin
// matrices; no Clebsch-Gordan coefficients appear explicitly.
//
// F(1) = 1/4 (a random port is a coin flip) and F grows towards 1.
// TooFewPorts below N = 1.
double pbt_entanglement_fidelity(int ports);

}  // namespace causalc
