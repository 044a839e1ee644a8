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
#include <vector>

#include "causalc/circuit.hpp"
#include "causalc/geometry.hpp"
#include "causalc/quantum.hpp"

namespace causalc {

// A named spacetime location a task hands a system to or demands one from.
struct TaskPoint {
  std::string id;
  PointValue at;
};

// Restricts a task's admissible inputs to a subspace. `isometry` has one
// orthonormal column per promised basis vector and maps the promised space
// into the full input space (all input systems tensored, reference last).
// Channel comparisons are then made after compressing both Choi operators
// onto the promised subspace, so behavior off the promise is unconstrained.
struct Promise {
  Matrix isometry;
};

// What must be done, and where: input systems handed over at input points,
// output systems demanded at output points, and the channel relating them.
// The admissible set is the closed tol-ball around `target` in normalized
// Choi trace distance. The reference system rides along untouched by any
// correct protocol; a 0-qubit reference is a trivial factor.
struct Task {
  Spacetime spacetime = Spacetime::minkowski2d();
  std::vector<TaskPoint> inputs;
  std::vector<TaskPoint> outputs;
  std::vector<SystemLabel> input_systems;
  std::vector<SystemLabel> output_systems;
  SystemLabel reference;
  // From input_systems + reference to output_systems + reference, in order.
  QuantumChannel target;
  double tol = kEquivalenceTol;
  std::optional<Promise> promise;
};

// Structural invariants: list lengths, leg sequences of the target, the
// promise isometry's shape and column orthonormality. ArityMismatch /
// LegMismatch / DimensionMismatch.
void check_task(const Task& t);

// The input-to-output precedence table. Entry (i, j) answers whether the
// i-th input point can signal the j-th output point.
struct CoarseSignature {
  int n = 0;
  int m = 0;
  std::vector<bool> matrix;  // row-major n x m

  bool at(int i, int j) const { return matrix[static_cast<size_t>(i) * m + j]; }
};

bool operator==(const CoarseSignature& a, const CoarseSignature& b);

// For every subset pair (S of inputs, T of outputs), whether some spacetime
// point lies in the joint future of S and the joint past of T. Indexed by
// input_mask * 2^m + output_mask; bit i of a mask selects the i-th point.
struct FineSignature {
  int n = 0;
  int m = 0;
  std::vector<bool> nonempty;  // size 2^n * 2^m

  bool at(unsigned input_mask, unsigned output_mask) const {
    return nonempty[(static_cast<size_t>(input_mask) << m) + output_mask];
  }
};

bool operator==(const FineSignature& a, const FineSignature& b);

CoarseSignature coarse_signature(const Task& t);
// 2^(n+m) region queries; refuses when n + m exceeds the cap
// (TooManyPoints).
FineSignature fine_signature(const Task& t, int max_points = 12);

// Signature equality between equally sized tasks (ArityMismatch otherwise).
// Order-sensitive: permuting a task's points permutes its signature.
bool same_coarse(const Task& a, const Task& b);
bool same_fine(const Task& a, const Task& b, int max_points = 12);

// Whether the circuit's effective channel is admissible for the task. The
// circuit must be laid out on the task: same spacetime backend, its input
// and output points matching the task's ids and locations in order, and
// system widths agreeing (LayoutMismatch otherwise). Simulation costs apply
// (DimensionCap).
bool accomplishes(const SpacetimeCircuit& circ, const Task& t);

}  // namespace causalc
