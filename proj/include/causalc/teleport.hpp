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
// Teleportation primitives. Normal teleportation is exact: the receiver
// holds the payload conjugated by a Pauli word X^a Z^b the sender learns
// from their Bell measurement, and decryption undoes it perfectly.
// Port-based teleportation comes in two flavors: an idealized relocation
// (the functional model of the infinite-port limit) and a physical
// finite-port protocol using the square-root measurement, whose fidelity
// only approaches 1.
//
// Sampled operations follow one key trajectory and take a seeded generator;
// averaged operations keep the key in a classical register leg and are
// deterministic, which is what channel-level verification wants.

#pragma once

#include <random>
#include <utility>
#include <vector>

#include "causalc/quantum.hpp"

namespace causalc {

// One-time-pad key of normal teleportation: bits (a, b) per teleported
// qubit, meaning the wire now carries X^a Z^b (payload).
struct PauliKey {
  std::vector<std::pair<int, int>> bits;

  int qubits() const { return static_cast<int>(bits.size()); }
  // Row-major reading of the bits, (a_0, b_0) most significant.
  long index() const;
  static PauliKey from_index(int qubits, long w);
  static PauliKey sample(int qubits, std::mt19937_64& rng);
};

// X^a Z^b across the key's qubits: what teleportation imprints.
Matrix encrypt_word(const PauliKey& key);
// Z^b X^a across the key's qubits: its exact inverse (Paulis square to I).
Matrix decrypt_word(const PauliKey& key);

// |beta_w> = (I (x) X^a Z^b)|Phi+> over a payload/anchor pair of `qubits`
// qubits each; the Bell basis vector the key `w` names.
Vector bell_vector(const PauliKey& key);

// Port-teleportation key: which of the N ports holds the payload.
// `ports == 0` encodes the idealized infinite-port protocol, where the
// index is pure bookkeeping.
struct PortKey {
  long index = 1;  // 1-based
  long ports = 0;
  bool ideal() const { return ports == 0; }
};

// k Bell pairs |Phi+><Phi+| with halves labeled <a_prefix>1..k and
// <b_prefix>1..k, legs interleaved a1, b1, a2, b2, ...
DensityState bell_pairs(int k, const std::string& a_prefix = "a",
                        const std::string& b_prefix = "b");

// Bell-measures the payload legs against the resource halves (total widths
// must agree; qubits pair up in concatenation order), consuming all of them.
// The Bell partners of the resource halves now hold the encrypted payload.
// Outcomes are exactly uniform, so the sampled trajectory needs no
// renormalization surprises. ResourceMissing / DimensionMismatch.
std::pair<DensityState, PauliKey> nt_encrypt(
    const DensityState& st, const std::vector<std::string>& src_legs,
    const std::vector<std::string>& resource_halves, std::mt19937_64& rng);

// Deterministic form: the measurement outcome is written to `key_register`
// (width 2k for k teleported qubits) instead of being sampled.
// KeyLengthMismatch if the register width is wrong.
DensityState nt_encrypt_averaged(const DensityState& st,
                                 const std::vector<std::string>& src_legs,
                                 const std::vector<std::string>& resource_halves,
                                 const SystemLabel& key_register);

// Conjugates the named legs by the decryption word. KeyLengthMismatch.
DensityState nt_decrypt(const DensityState& st,
                        const std::vector<std::string>& legs,
                        const PauliKey& key);

// Reads the key register, applies the matching correction to `legs`, and
// traces the register out.
DensityState nt_decrypt_averaged(const DensityState& st,
                                 const std::vector<std::string>& legs,
                                 const std::string& key_register);

// Idealized port teleportation: the payload legs are renamed to the
// receiver labels (matching widths) and nothing touches the matrix. The
// reality of the infinite-port limit is accounted for at the annotation
// layer, where the receiver cannot use the parcel before the index arrives.
std::pair<DensityState, PortKey> pbt_ideal_send(
    const DensityState& st, const std::vector<std::string>& payload_legs,
    const std::vector<SystemLabel>& receiver_labels);

// The square-root-measurement POVM of N-port teleportation on the sender's
// N+1 qubits (payload first, then ports). N elements summing to I; the
// completion of the singular direction is spread evenly, which cannot
// affect outcome statistics. Dimensions grow as 2^(N+1); intended for small
// N only.
std::vector<Matrix> pbt_srm_povm(int ports);

// Physical finite-port teleportation of a single qubit over N prearranged
// Bell pairs (a_legs[i], b_legs[i]), all legs present in `st` and one qubit
// wide. Measures, consumes the payload and the a-side, and returns the
// sampled 1-based port index; the indicated b-leg approximates the payload.
// TooFewPorts below N = 2.
std::pair<DensityState, PortKey> pbt_finite_send(
    const DensityState& st, const std::string& payload_leg,
    const std::vector<std::string>& a_legs,
    const std::vector<std::string>& b_legs, std::mt19937_64& rng);

}  // namespace causalc
