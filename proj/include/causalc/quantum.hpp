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

#include <random>
#include <string>
#include <vector>

#include "causalc/common.hpp"

namespace causalc {

// A labeled tensor factor. Labels name the wires of circuits and the legs of
// dense states; the dense kernel routes channels onto states by label id.
//
// Transit labels carry the edge they ride; the other kinds carry their
// owning point. `qubits` may be 0 for Ancilla and Reference labels, which
// denotes a trivial (dimension-1) factor.
struct SystemLabel {
  enum class Kind { Input, Output, Transit, Ancilla, Reference };

  std::string id;
  Kind kind = Kind::Transit;
  int qubits = 1;
  std::string point;                 // Input/Output/Ancilla/Reference anchor
  std::string edge_from, edge_to;    // Transit anchor

  long dim() const { return 1L << qubits; }
};

const char* system_kind_name(SystemLabel::Kind kind);

// The cap on the total width of any dense state. Exceeding it raises
// DimensionCap. Set once before concurrent work; reads are unsynchronized.
int max_qubits();
void set_max_qubits(int qubits);

// A density operator over an ordered list of labeled legs. Leg 0 is the most
// significant index digit. Invariants (checked by check_density and at the
// serialization boundary): Hermitian, unit trace, positive semidefinite.
struct DensityState {
  std::vector<SystemLabel> legs;
  Matrix matrix;

  long dim() const;
  int total_qubits() const;
  // Index of the leg with this id; UnknownLeg if absent.
  int leg_index(const std::string& id) const;
  bool has_leg(const std::string& id) const;
};

// The trivial state on no legs (a 1x1 matrix holding 1): the unit for tensor.
DensityState scalar_state();
// Validates legs (unique ids, width under the cap) and the matrix
// (dimension product, hermiticity within tol, trace within tol of 1). The
// O(dim^3) positivity check (minimum eigenvalue >= -10 tol) only runs when
// check_psd is set; callers at trust boundaries enable it.
void check_density(const DensityState& st, double tol = 1e-10,
                   bool check_psd = false);

// A CPTP map given by Kraus operators, each of shape out_dim x in_dim, from
// the ordered in_legs factorization to the ordered out_legs factorization.
struct QuantumChannel {
  std::vector<SystemLabel> in_legs;
  std::vector<SystemLabel> out_legs;
  std::vector<Matrix> kraus;

  long in_dim() const;
  long out_dim() const;
};

QuantumChannel identity_channel(std::vector<SystemLabel> legs);
bool is_identity_channel(const QuantumChannel& ch, double tol = 1e-12);
// Completeness sum(K^dagger K) = I within tol, plus shape checks.
void check_channel(const QuantumChannel& ch, double tol = kStructuralTol);

// The channel's Choi operator: sum_K w_K w_K^dagger with
// w_K = sum_i |i> (x) K|i>, input factor first. Unnormalized: trace = in_dim
// and the partial trace over the output factor is the input identity.
struct ChoiMatrix {
  long in_dim = 1;
  long out_dim = 1;
  Matrix matrix;
};

ChoiMatrix choi(const QuantumChannel& ch);
// Trace-norm distance of the trace-normalized Choi operators:
// ||Ca - Cb||_1 / in_dim. Ranges over [0, 2]; 0 iff the channels are equal.
double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b);
bool channels_equal(const QuantumChannel& a, const QuantumChannel& b,
                    double tol = kEquivalenceTol);
// Reconstructs a Kraus presentation from a Choi operator by eigendecomposing
// and keeping eigenvalues above cutoff.
QuantumChannel kraus_from_choi(const ChoiMatrix& c,
                               std::vector<SystemLabel> in_legs,
                               std::vector<SystemLabel> out_legs,
                               double cutoff = 1e-12);
// The channel acting on its own legs while `extra` legs pass through
// untouched: in legs become ch.in_legs + extra, out legs ch.out_legs +
// extra. LegCollision if an extra leg id is already taken.
QuantumChannel channel_tensor_identity(const QuantumChannel& ch,
                                       const std::vector<SystemLabel>& extra);

// --- State algebra -----------------------------------------------------

// Kronecker product with concatenated legs. LegCollision on shared ids.
DensityState tensor(const DensityState& a, const DensityState& b);
// Applies the channel on its named in_legs (which must all be present);
// result legs are out_legs followed by the untouched legs in their original
// order. LegMismatch / DimensionMismatch / LegCollision / DimensionCap.
DensityState apply_channel(const DensityState& st, const QuantumChannel& ch);
// Traces out the named legs, preserving the order of the rest.
DensityState partial_trace(const DensityState& st,
                           const std::vector<std::string>& drop_ids);
// Reorders legs to exactly `order` (a permutation of all leg ids).
DensityState permute_legs(const DensityState& st,
                          const std::vector<std::string>& order);
// Swaps one leg's label for another of the same dimension (no matrix work).
// LegCollision if the new id is already taken by a different leg.
DensityState relabel_leg(const DensityState& st, const std::string& from,
                         const SystemLabel& to);
// Shorthand for conjugation by a unitary acting on the named legs.
DensityState apply_unitary(const DensityState& st,
                           const std::vector<SystemLabel>& legs,
                           const Matrix& u);

// --- Common states and operators ---------------------------------------

// |b><b| on one leg of any width (b indexes the computational basis).
DensityState basis_state(const SystemLabel& leg, long b);
DensityState maximally_mixed(const std::vector<SystemLabel>& legs);
// Normalized |Phi+><Phi+| across two legs of equal dimension.
DensityState maximally_entangled(const SystemLabel& a, const SystemLabel& b);

// Kronecker product (plain matrices; for states use tensor()).
Matrix kron(const Matrix& a, const Matrix& b);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
// kron over qubits of X^a Z^b, one (a, b) pair per qubit, qubit 0 first.
Matrix pauli_word(const std::vector<std::pair<int, int>>& bits);

// --- Seeded randomness (test fixtures and bundled examples) ------------

Matrix random_unitary(long dim, std::mt19937_64& rng);
// Random isometry-dilated channel with `kraus_count` Kraus operators.
// Requires out_dim * kraus_count >= in_dim.
QuantumChannel random_channel(std::vector<SystemLabel> in_legs,
                              std::vector<SystemLabel> out_legs,
                              int kraus_count, std::mt19937_64& rng);
DensityState random_density(std::vector<SystemLabel> legs,
                            std::mt19937_64& rng);

}  // namespace causalc
