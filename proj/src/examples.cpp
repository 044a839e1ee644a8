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

#include "causalc/examples.hpp"

#include <random>
#include <utility>

namespace causalc {

namespace {

SystemLabel input_label(const std::string& id, int qubits,
                        const std::string& point) {
  SystemLabel l;
  l.id = id;
  l.kind = SystemLabel::Kind::Input;
  l.qubits = qubits;
  l.point = point;
  return l;
}

SystemLabel output_label(const std::string& id, int qubits,
                         const std::string& point) {
  SystemLabel l;
  l.id = id;
  l.kind = SystemLabel::Kind::Output;
  l.qubits = qubits;
  l.point = point;
  return l;
}

SystemLabel transit_label(const std::string& id, int qubits,
                          const std::string& from, const std::string& to) {
  SystemLabel l;
  l.id = id;
  l.kind = SystemLabel::Kind::Transit;
  l.qubits = qubits;
  l.edge_from = from;
  l.edge_to = to;
  return l;
}

SystemLabel ancilla_label(const std::string& id, int qubits,
                          const std::string& point) {
  SystemLabel l;
  l.id = id;
  l.kind = SystemLabel::Kind::Ancilla;
  l.qubits = qubits;
  l.point = point;
  return l;
}

SystemLabel reference_label() {
  SystemLabel l;
  l.id = "ref";
  l.kind = SystemLabel::Kind::Reference;
  l.qubits = 0;
  return l;
}

// A do-nothing channel that moves a parcel from one leg name to another.
QuantumChannel wire_channel(const SystemLabel& in, const SystemLabel& out) {
  QuantumChannel ch;
  ch.in_legs = {in};
  ch.out_legs = {out};
  ch.kraus = {Matrix::Identity(in.dim(), in.dim())};
  return ch;
}

CircuitPoint circuit_point(const std::string& id, CircuitPoint::Role role,
                           double t, double x) {
  CircuitPoint p;
  p.id = id;
  p.role = role;
  p.at = PointValue::minkowski(t, x);
  return p;
}

// The shared two-qubit unitary of the two-station tasks, drawn once from a
// fixed seed.
Matrix two_station_unitary() {
  std::mt19937_64 rng(7);
  return random_unitary(4, rng);
}

// Delivery-on-demand: one sender holds a parcel qubit q and two flag
// qubits (b1, b2) promised to satisfy b1 xor b2 = 1. The parcel must come
// out at station r1 when (b1, b2) = (1, 0) and at station r2 when (0, 1);
// the station not selected emits |0>. Off the promise the behavior is
// fixed to trace-and-replace with |00> so the map stays trace preserving.
Task summoning_task() {
  Task t;
  t.spacetime = Spacetime::minkowski2d();
  t.inputs = {{"c0", PointValue::minkowski(0, 0)}};
  t.outputs = {{"r1", PointValue::minkowski(4, -2)},
               {"r2", PointValue::minkowski(4, 2)}};
  SystemLabel s = input_label("S", 3, "c0");
  SystemLabel t1 = output_label("T1", 1, "r1");
  SystemLabel t2 = output_label("T2", 1, "r2");
  t.input_systems = {s};
  t.output_systems = {t1, t2};
  t.reference = reference_label();

  QuantumChannel target;
  target.in_legs = {s, t.reference};
  target.out_legs = {t1, t2, t.reference};
  // Input basis |q b1 b2> at q*4 + b1*2 + b2; output basis |t1 t2>.
  Matrix a10 = Matrix::Zero(4, 8);
  Matrix a01 = Matrix::Zero(4, 8);
  for (long q = 0; q < 2; ++q) {
    a10(q * 2 + 0, q * 4 + 2) = 1.0;  // |q,1,0> -> |q,0>
    a01(q, q * 4 + 1) = 1.0;          // |q,0,1> -> |0,q>
  }
  target.kraus = {a10, a01};
  for (long q = 0; q < 2; ++q)
    for (long b = 0; b < 2; ++b) {
      Matrix off = Matrix::Zero(4, 8);
      off(0, q * 4 + b * 2 + b) = 1.0;  // |q,b,b> -> |00>
      target.kraus.push_back(off);
    }
  t.target = std::move(target);

  Promise promise;
  promise.isometry = Matrix::Zero(8, 4);
  for (long q = 0; q < 2; ++q) {
    promise.isometry(q * 4 + 2, q * 2 + 0) = 1.0;  // |q,1,0>
    promise.isometry(q * 4 + 1, q * 2 + 1) = 1.0;  // |q,0,1>
  }
  t.promise = std::move(promise);
  return t;
}

// Two stations each feed one qubit in; a fixed joint unitary must act on
// the pair and each station must get its half back one tick later, too
// soon for both qubits to visit any single midpoint and return.
Task two_station_task() {
  Task t;
  t.spacetime = Spacetime::minkowski2d();
  t.inputs = {{"c1", PointValue::minkowski(0, -1)},
              {"c2", PointValue::minkowski(0, 1)}};
  t.outputs = {{"r1", PointValue::minkowski(2, -1)},
               {"r2", PointValue::minkowski(2, 1)}};
  SystemLabel a = input_label("A", 1, "c1");
  SystemLabel b = input_label("B", 1, "c2");
  SystemLabel x = output_label("X", 1, "r1");
  SystemLabel y = output_label("Y", 1, "r2");
  t.input_systems = {a, b};
  t.output_systems = {x, y};
  t.reference = reference_label();
  t.target.in_legs = {a, b, t.reference};
  t.target.out_legs = {x, y, t.reference};
  t.target.kraus = {two_station_unitary()};
  return t;
}

// The obvious circuit for the two-station task: both qubits meet at a
// midpoint gate and bounce back. Its compiled form needs no midpoint.
SpacetimeCircuit two_station_circuit() {
  SpacetimeCircuit c;
  c.spacetime = Spacetime::minkowski2d();
  c.points = {circuit_point("c1", CircuitPoint::Role::Input, 0, -1),
              circuit_point("c2", CircuitPoint::Role::Input, 0, 1),
              circuit_point("g", CircuitPoint::Role::Gate, 1, 0),
              circuit_point("r1", CircuitPoint::Role::Output, 2, -1),
              circuit_point("r2", CircuitPoint::Role::Output, 2, 1)};
  c.edges = {{"c1", "g", "e1"},
             {"c2", "g", "e2"},
             {"g", "r1", "e3"},
             {"g", "r2", "e4"}};
  SystemLabel i1 = input_label("A", 1, "c1");
  SystemLabel i2 = input_label("B", 1, "c2");
  SystemLabel o1 = output_label("X", 1, "r1");
  SystemLabel o2 = output_label("Y", 1, "r2");
  SystemLabel e1 = transit_label("e1", 1, "c1", "g");
  SystemLabel e2 = transit_label("e2", 1, "c2", "g");
  SystemLabel e3 = transit_label("e3", 1, "g", "r1");
  SystemLabel e4 = transit_label("e4", 1, "g", "r2");
  for (const SystemLabel& l : {i1, i2, o1, o2, e1, e2, e3, e4})
    c.systems.emplace(l.id, l);
  c.input_system = {{"c1", "A"}, {"c2", "B"}};
  c.output_system = {{"r1", "X"}, {"r2", "Y"}};
  c.ancilla_state = scalar_state();

  c.channels.emplace("c1", wire_channel(i1, e1));
  c.channels.emplace("c2", wire_channel(i2, e2));
  QuantumChannel mid;
  mid.in_legs = {e1, e2};
  mid.out_legs = {e3, e4};
  mid.kraus = {two_station_unitary()};
  c.channels.emplace("g", std::move(mid));
  c.channels.emplace("r1", wire_channel(e3, o1));
  c.channels.emplace("r2", wire_channel(e4, o2));
  return c;
}

// A wider compilation workout: two first-layer gates whose leftovers meet
// at a second-layer gate, so the pass must gather across stations, cross
// three layers of keys, and shed back through every one of them.
SpacetimeCircuit gate_removal_circuit() {
  SpacetimeCircuit c;
  c.spacetime = Spacetime::minkowski2d();
  c.points = {circuit_point("c_1", CircuitPoint::Role::Input, 0, -3),
              circuit_point("c_2", CircuitPoint::Role::Input, 0, -1),
              circuit_point("c_3", CircuitPoint::Role::Input, 0, 1),
              circuit_point("c_4", CircuitPoint::Role::Input, 0, 3),
              circuit_point("g_1", CircuitPoint::Role::Gate, 2, -2),
              circuit_point("g_3", CircuitPoint::Role::Gate, 2, 2),
              circuit_point("g_2", CircuitPoint::Role::Gate, 4, 0),
              circuit_point("r_1", CircuitPoint::Role::Output, 4, -2),
              circuit_point("r_3", CircuitPoint::Role::Output, 4, 2),
              circuit_point("r_2", CircuitPoint::Role::Output, 6, 0)};
  c.edges = {{"c_1", "g_1", "e1"}, {"c_2", "g_1", "e2"},
             {"g_1", "r_1", "e3"}, {"c_4", "g_3", "e4"},
             {"c_3", "g_3", "e5"}, {"g_3", "r_3", "e6"},
             {"g_3", "g_2", "e7"}, {"g_1", "g_2", "e8"},
             {"g_2", "r_2", "e9"}};
  std::vector<SystemLabel> labels = {
      input_label("I1", 1, "c_1"),  input_label("I2", 1, "c_2"),
      input_label("I3", 1, "c_3"),  input_label("I4", 1, "c_4"),
      output_label("O1", 1, "r_1"), output_label("O2", 1, "r_3"),
      output_label("O3", 1, "r_2")};
  for (const CircuitEdge& e : c.edges)
    labels.push_back(transit_label(e.system, 1, e.from, e.to));
  for (const SystemLabel& l : labels) c.systems.emplace(l.id, l);
  c.input_system = {{"c_1", "I1"}, {"c_2", "I2"}, {"c_3", "I3"},
                    {"c_4", "I4"}};
  c.output_system = {{"r_1", "O1"}, {"r_3", "O2"}, {"r_2", "O3"}};
  c.ancilla_state = scalar_state();

  std::mt19937_64 rng(11);
  QuantumChannel g1;
  g1.in_legs = {c.systems.at("e1"), c.systems.at("e2")};
  g1.out_legs = {c.systems.at("e3"), c.systems.at("e8")};
  g1.kraus = {random_unitary(4, rng)};
  QuantumChannel g3;
  g3.in_legs = {c.systems.at("e4"), c.systems.at("e5")};
  g3.out_legs = {c.systems.at("e6"), c.systems.at("e7")};
  g3.kraus = {random_unitary(4, rng)};
  QuantumChannel g2 = random_channel(
      {c.systems.at("e7"), c.systems.at("e8")}, {c.systems.at("e9")}, 2, rng);

  c.channels.emplace("c_1", wire_channel(c.systems.at("I1"), c.systems.at("e1")));
  c.channels.emplace("c_2", wire_channel(c.systems.at("I2"), c.systems.at("e2")));
  c.channels.emplace("c_3", wire_channel(c.systems.at("I3"), c.systems.at("e5")));
  c.channels.emplace("c_4", wire_channel(c.systems.at("I4"), c.systems.at("e4")));
  c.channels.emplace("g_1", std::move(g1));
  c.channels.emplace("g_3", std::move(g3));
  c.channels.emplace("g_2", std::move(g2));
  c.channels.emplace("r_1", wire_channel(c.systems.at("e3"), c.systems.at("O1")));
  c.channels.emplace("r_3", wire_channel(c.systems.at("e6"), c.systems.at("O2")));
  c.channels.emplace("r_2", wire_channel(c.systems.at("e9"), c.systems.at("O3")));
  return c;
}

}  // namespace

std::vector<ExampleEntry> bundled_examples() {
  return {
      {"summoning", "task",
       "deliver an unknown qubit at whichever of two stations the flag "
       "qubits select"},
      {"summoning-difficult", "task",
       "the same delivery task on a bare three-element causal set"},
      {"pbqc", "task",
       "apply a fixed joint unitary to qubits from two stations and return "
       "each half on time"},
      {"pbqc-naive", "circuit",
       "the obvious circuit for the two-station task, with one midpoint "
       "gate"},
      {"gate-removal", "circuit",
       "a three-gate circuit whose compilation exercises gathering, "
       "crossing, and shedding"},
  };
}

Task example_task(const std::string& name) {
  if (name == "summoning") return summoning_task();
  if (name == "summoning-difficult")
    return causal_set_skeleton(summoning_task());
  if (name == "pbqc") return two_station_task();
  fail(ErrorCode::ResourceMissing, "no bundled task named '" + name + "'");
}

SpacetimeCircuit example_circuit(const std::string& name) {
  if (name == "pbqc-naive") return two_station_circuit();
  if (name == "gate-removal") return gate_removal_circuit();
  fail(ErrorCode::ResourceMissing, "no bundled circuit named '" + name + "'");
}

SpacetimeCircuit summoning_circuit() {
  SpacetimeCircuit c;
  c.spacetime = Spacetime::minkowski2d();
  c.points = {circuit_point("c0", CircuitPoint::Role::Input, 0, 0),
              circuit_point("g1", CircuitPoint::Role::Gate, 1.5, -0.5),
              circuit_point("g2", CircuitPoint::Role::Gate, 2, 0),
              circuit_point("r1", CircuitPoint::Role::Output, 4, -2),
              circuit_point("r2", CircuitPoint::Role::Output, 4, 2)};
  c.edges = {{"c0", "g1", "w1"},
             {"c0", "g2", "w2"},
             {"g1", "r1", "w3"},
             {"g1", "g2", "w4"},
             {"g2", "r2", "w5"}};
  SystemLabel s = input_label("S", 3, "c0");
  SystemLabel o1 = output_label("T1", 1, "r1");
  SystemLabel o2 = output_label("T2", 1, "r2");
  SystemLabel w1 = transit_label("w1", 2, "c0", "g1");  // (q, b1)
  SystemLabel w2 = transit_label("w2", 1, "c0", "g2");  // b2
  SystemLabel w3 = transit_label("w3", 1, "g1", "r1");
  SystemLabel w4 = transit_label("w4", 1, "g1", "g2");
  SystemLabel w5 = transit_label("w5", 1, "g2", "r2");
  SystemLabel anc = ancilla_label("a", 1, "g1");
  for (const SystemLabel& l : {s, o1, o2, w1, w2, w3, w4, w5, anc})
    c.systems.emplace(l.id, l);
  c.input_system = {{"c0", "S"}};
  c.output_system = {{"r1", "T1"}, {"r2", "T2"}};
  c.ancilla_system = {{"g1", {"a"}}};
  c.ancilla_state = basis_state(anc, 0);

  // The sender regroups (q, b1, b2) into (q, b1) toward the router and b2
  // toward the far rail; both indexings agree, so the matrix is identity.
  QuantumChannel fanout;
  fanout.in_legs = {s};
  fanout.out_legs = {w1, w2};
  fanout.kraus = {Matrix::Identity(8, 8)};
  c.channels.emplace("c0", std::move(fanout));

  // The router reads b1. On b1 = 1 the parcel exits on the r1 rail and the
  // blank ancilla continues; on b1 = 0 they swap. In: (q, b1) * a at
  // q*4 + b1*2 + a. Out: rail legs (toward r1, toward g2) at u*2 + v.
  QuantumChannel router;
  router.in_legs = {w1, anc};
  router.out_legs = {w3, w4};
  router.kraus = {Matrix::Zero(4, 8), Matrix::Zero(4, 8)};
  for (long q = 0; q < 2; ++q)
    for (long b = 0; b < 2; ++b)
      for (long a = 0; a < 2; ++a) {
        long u = b ? q : a;  // toward r1
        long v = b ? a : q;  // toward g2
        router.kraus[b](u * 2 + v, q * 4 + b * 2 + a) = 1.0;
      }
  c.channels.emplace("g1", std::move(router));

  // The far rail absorbs b2 and passes the payload on. In: (b2, x).
  QuantumChannel absorb;
  absorb.in_legs = {w2, w4};
  absorb.out_legs = {w5};
  absorb.kraus = {Matrix::Zero(2, 4), Matrix::Zero(2, 4)};
  for (long y = 0; y < 2; ++y)
    for (long x = 0; x < 2; ++x) absorb.kraus[y](x, y * 2 + x) = 1.0;
  c.channels.emplace("g2", std::move(absorb));

  c.channels.emplace("r1", wire_channel(w3, o1));
  c.channels.emplace("r2", wire_channel(w5, o2));
  return c;
}

Task causal_set_skeleton(const Task& original) {
  std::vector<const TaskPoint*> pts;
  for (const TaskPoint& p : original.inputs) pts.push_back(&p);
  for (const TaskPoint& p : original.outputs) pts.push_back(&p);
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  for (const TaskPoint* p : pts) elements.push_back(p->id);
  for (const TaskPoint* p : pts)
    for (const TaskPoint* q : pts)
      if (p != q && original.spacetime.precedes(p->at, q->at))
        relations.emplace_back(p->id, q->id);
  Task out = original;
  out.spacetime = Spacetime::causal_set(elements, relations);
  for (TaskPoint& p : out.inputs) p.at = PointValue::causal(p.id);
  for (TaskPoint& p : out.outputs) p.at = PointValue::causal(p.id);
  return out;
}

}  // namespace causalc
