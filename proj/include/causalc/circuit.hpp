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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "causalc/geometry.hpp"
#include "causalc/quantum.hpp"
#include "causalc/script.hpp"

namespace causalc {

// A node of the circuit graph: a role-tagged spacetime location. Node ids
// are the circuit's naming layer; several nodes may share one location
// (they are distinct graph vertices), but an edge never connects co-located
// nodes, because wires must traverse a causal curve of nonzero extent.
struct CircuitPoint {
  enum class Role { Input, Gate, Output };

  std::string id;
  Role role = Role::Input;
  PointValue at;
};

const char* point_role_name(CircuitPoint::Role role);

// A wire: an ordered pair of point ids plus the transit system riding it.
struct CircuitEdge {
  std::string from;
  std::string to;
  std::string system;
};

// A quantum protocol pinned to spacetime: points where channels act, wires
// between them, labeled systems, a prearranged (possibly entangled) ancilla
// state shared across the points, and one channel per point from its
// incoming systems to its outgoing systems.
//
// Two forms exist. The standard form stores a channel for every point and
// no script. The compiled (gate-free) form produced by the gate-removal
// pass stores no per-point channels; instead `script` records the local
// instructions the input and output agents execute, and validation replays
// it. Circuits are immutable values; passes build new ones.
struct SpacetimeCircuit {
  Spacetime spacetime = Spacetime::minkowski2d();
  std::vector<CircuitPoint> points;
  std::vector<CircuitEdge> edges;
  std::map<std::string, SystemLabel> systems;
  std::map<std::string, std::string> input_system;   // input point -> I_p
  std::map<std::string, std::string> output_system;  // output point -> O_p
  // point -> resident prearranged systems, in declaration order. A standard
  // circuit has at most one per gate; the gate-removal pass can park several
  // at one point, so this is a list.
  std::map<std::string, std::vector<std::string>> ancilla_system;
  DensityState ancilla_state;                         // over all R_p legs
  std::map<std::string, QuantumChannel> channels;     // point -> channel
  std::optional<Script> script;

  bool compiled() const { return script.has_value(); }

  const CircuitPoint& point(const std::string& id) const;  // UnknownPoint
  bool has_point(const std::string& id) const;
  const SystemLabel& system(const std::string& id) const;  // UnknownSystem

  // Point ids by role, in declaration order.
  std::vector<std::string> input_points() const;
  std::vector<std::string> output_points() const;
  std::vector<std::string> gate_points() const;

  // 1-based index of an input/output point among its role (for display).
  int role_index(const std::string& id) const;
};

// Points with an edge into p, in edge declaration order.
std::vector<std::string> in_set(const SpacetimeCircuit& circ,
                                const std::string& point_id);
// Points p has an edge to, in edge declaration order.
std::vector<std::string> out_set(const SpacetimeCircuit& circ,
                                 const std::string& point_id);
// The input points with a directed edge-path to p. Trivial paths count, so
// an input point is among its own roots. Result in input declaration order.
std::vector<std::string> roots(const SpacetimeCircuit& circ,
                               const std::string& point_id);
// Every edge forward; ties broken by point declaration order. CycleDetected.
std::vector<std::string> topological_order(const SpacetimeCircuit& circ);

// The ordered systems a point consumes: incoming transits in edge
// declaration order, then the input system, then the resident ancillas.
std::vector<SystemLabel> in_systems(const SpacetimeCircuit& circ,
                                    const std::string& point_id);
// The ordered systems a point produces: outgoing transits in edge
// declaration order, then the output system.
std::vector<SystemLabel> out_systems(const SpacetimeCircuit& circ,
                                     const std::string& point_id);

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every structural invariant and returns the full list of
// violations; an empty report means the circuit is well formed. Never
// throws for content problems (only for malformed queries).
ValidationReport validate(const SpacetimeCircuit& circ);
// Throws InvalidCircuit carrying the first violation if any.
void require_valid(const SpacetimeCircuit& circ);

}  // namespace causalc
