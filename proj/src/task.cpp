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

#include "causalc/task.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "causalc/executor.hpp"

namespace causalc {

namespace {

void check_leg_sequence(const std::vector<SystemLabel>& got,
                        const std::vector<SystemLabel>& systems,
                        const SystemLabel& reference, const char* side) {
  require(got.size() == systems.size() + 1, ErrorCode::LegMismatch,
          std::string("target ") + side + " legs must list the " + side +
              " systems then the reference");
  for (size_t i = 0; i < systems.size(); ++i) {
    require(got[i].id == systems[i].id && got[i].qubits == systems[i].qubits,
            ErrorCode::LegMismatch,
            std::string("target ") + side + " leg " + std::to_string(i) +
                " does not match system " + systems[i].id);
  }
  const SystemLabel& last = got.back();
  require(last.id == reference.id && last.qubits == reference.qubits,
          ErrorCode::LegMismatch,
          std::string("target ") + side + " legs must end with the reference");
}

void check_task_points(const Task& t, const std::vector<TaskPoint>& pts,
                       const char* side) {
  for (const TaskPoint& p : pts) {
    bool want_causal = t.spacetime.backend() == Spacetime::Backend::CausalSet;
    bool is_causal = p.at.kind == PointValue::Kind::CausalSetElement;
    require(want_causal == is_causal, ErrorCode::BackendMismatch,
            std::string(side) + " point " + p.id +
                " uses the wrong coordinate kind for the spacetime");
    if (is_causal) {
      require(t.spacetime.has_element(p.at.element), ErrorCode::UnknownElement,
              std::string(side) + " point " + p.id + " names element " +
                  p.at.element + " absent from the causal set");
    }
  }
}

// Compresses a Choi operator onto the promised input subspace. With the
// Choi convention C = sum_ij |i><j| (x) N(|i><j|), restriction of inputs to
// the range of V is conjugation by conj(V) (x) I on the input factor.
ChoiMatrix compress_choi(const ChoiMatrix& c, const Matrix& isometry) {
  Matrix w = kron(isometry.conjugate(),
                  Matrix::Identity(c.out_dim, c.out_dim));
  ChoiMatrix out;
  out.in_dim = isometry.cols();
  out.out_dim = c.out_dim;
  out.matrix = w.adjoint() * c.matrix * w;
  return out;
}

bool same_spacetime(const Spacetime& a, const Spacetime& b) {
  if (a.backend() != b.backend()) return false;
  if (a.backend() == Spacetime::Backend::Minkowski2D)
    return a.epsilon() == b.epsilon();
  return a.elements() == b.elements() &&
         a.relation_pairs() == b.relation_pairs();
}

}  // namespace

void check_task(const Task& t) {
  require(!t.inputs.empty() && !t.outputs.empty(), ErrorCode::ArityMismatch,
          "a task needs at least one input and one output point");
  require(t.inputs.size() == t.input_systems.size(), ErrorCode::ArityMismatch,
          "one input system per input point");
  require(t.outputs.size() == t.output_systems.size(),
          ErrorCode::ArityMismatch, "one output system per output point");

  std::vector<std::string> seen;
  for (const TaskPoint& p : t.inputs) seen.push_back(p.id);
  for (const TaskPoint& p : t.outputs) seen.push_back(p.id);
  for (size_t i = 0; i < seen.size(); ++i)
    for (size_t j = i + 1; j < seen.size(); ++j)
      require(seen[i] != seen[j], ErrorCode::LayoutMismatch,
              "duplicate task point id " + seen[i]);

  check_task_points(t, t.inputs, "input");
  check_task_points(t, t.outputs, "output");

  check_leg_sequence(t.target.in_legs, t.input_systems, t.reference, "input");
  check_leg_sequence(t.target.out_legs, t.output_systems, t.reference,
                     "output");
  check_channel(t.target);

  if (t.promise) {
    const Matrix& v = t.promise->isometry;
    require(v.rows() == t.target.in_dim() && v.cols() >= 1 &&
                v.cols() <= v.rows(),
            ErrorCode::DimensionMismatch,
            "promise isometry must map a subspace into the full input space");
    Matrix gram = v.adjoint() * v;
    double err = (gram - Matrix::Identity(v.cols(), v.cols())).norm();
    require(err <= kStructuralTol * static_cast<double>(v.cols()),
            ErrorCode::DimensionMismatch,
            "promise isometry columns are not orthonormal");
  }
}

bool operator==(const CoarseSignature& a, const CoarseSignature& b) {
  return a.n == b.n && a.m == b.m && a.matrix == b.matrix;
}

bool operator==(const FineSignature& a, const FineSignature& b) {
  return a.n == b.n && a.m == b.m && a.nonempty == b.nonempty;
}

CoarseSignature coarse_signature(const Task& t) {
  check_task(t);
  CoarseSignature sig;
  sig.n = static_cast<int>(t.inputs.size());
  sig.m = static_cast<int>(t.outputs.size());
  sig.matrix.reserve(static_cast<size_t>(sig.n) * sig.m);
  for (const TaskPoint& c : t.inputs)
    for (const TaskPoint& r : t.outputs)
      sig.matrix.push_back(t.spacetime.precedes(c.at, r.at));
  return sig;
}

FineSignature fine_signature(const Task& t, int max_points) {
  check_task(t);
  int n = static_cast<int>(t.inputs.size());
  int m = static_cast<int>(t.outputs.size());
  require(n + m <= max_points, ErrorCode::TooManyPoints,
          "fine signature would enumerate 2^" + std::to_string(n + m) +
              " subset pairs; cap is 2^" + std::to_string(max_points));
  FineSignature sig;
  sig.n = n;
  sig.m = m;
  sig.nonempty.resize(static_cast<size_t>(1) << (n + m));
  for (unsigned cm = 0; cm < (1u << n); ++cm) {
    for (unsigned rm = 0; rm < (1u << m); ++rm) {
      Region reg;
      for (int i = 0; i < n; ++i)
        if (cm & (1u << i)) reg.future_of.push_back(t.inputs[i].at);
      for (int j = 0; j < m; ++j)
        if (rm & (1u << j)) reg.past_of.push_back(t.outputs[j].at);
      sig.nonempty[(static_cast<size_t>(cm) << m) + rm] =
          region_nonempty(t.spacetime, reg);
    }
  }
  return sig;
}

bool same_coarse(const Task& a, const Task& b) {
  require(a.inputs.size() == b.inputs.size() &&
              a.outputs.size() == b.outputs.size(),
          ErrorCode::ArityMismatch,
          "coarse signatures compare only equally sized tasks");
  return coarse_signature(a) == coarse_signature(b);
}

bool same_fine(const Task& a, const Task& b, int max_points) {
  require(a.inputs.size() == b.inputs.size() &&
              a.outputs.size() == b.outputs.size(),
          ErrorCode::ArityMismatch,
          "fine signatures compare only equally sized tasks");
  return fine_signature(a, max_points) == fine_signature(b, max_points);
}

bool accomplishes(const SpacetimeCircuit& circ, const Task& t) {
  check_task(t);
  require(same_spacetime(circ.spacetime, t.spacetime),
          ErrorCode::LayoutMismatch,
          "circuit and task live on different spacetimes");

  std::vector<std::string> cin = circ.input_points();
  std::vector<std::string> cout = circ.output_points();
  require(cin.size() == t.inputs.size() && cout.size() == t.outputs.size(),
          ErrorCode::LayoutMismatch,
          "circuit and task disagree on point counts");
  for (size_t i = 0; i < cin.size(); ++i) {
    const CircuitPoint& p = circ.point(cin[i]);
    require(p.id == t.inputs[i].id && p.at == t.inputs[i].at,
            ErrorCode::LayoutMismatch,
            "input point " + std::to_string(i) + " differs from the task's");
    const SystemLabel& sys = circ.system(circ.input_system.at(p.id));
    require(sys.qubits == t.input_systems[i].qubits,
            ErrorCode::LayoutMismatch,
            "input system width at " + p.id + " differs from the task's");
  }
  for (size_t j = 0; j < cout.size(); ++j) {
    const CircuitPoint& p = circ.point(cout[j]);
    require(p.id == t.outputs[j].id && p.at == t.outputs[j].at,
            ErrorCode::LayoutMismatch,
            "output point " + std::to_string(j) + " differs from the task's");
    const SystemLabel& sys = circ.system(circ.output_system.at(p.id));
    require(sys.qubits == t.output_systems[j].qubits,
            ErrorCode::LayoutMismatch,
            "output system width at " + p.id + " differs from the task's");
  }

  QuantumChannel eff = effective_channel(circ).channel;
  if (t.reference.qubits > 0)
    eff = channel_tensor_identity(eff, {t.reference});

  ChoiMatrix got = choi(eff);
  ChoiMatrix want = choi(t.target);
  if (t.promise) {
    got = compress_choi(got, t.promise->isometry);
    want = compress_choi(want, t.promise->isometry);
  }
  return choi_distance(got, want) <= t.tol;
}

}  // namespace causalc
