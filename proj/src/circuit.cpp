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

#include "causalc/circuit.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace causalc {

const char* point_role_name(CircuitPoint::Role role) {
  switch (role) {
    case CircuitPoint::Role::Input: return "input";
    case CircuitPoint::Role::Gate: return "gate";
    case CircuitPoint::Role::Output: return "output";
  }
  return "?";
}

const CircuitPoint& SpacetimeCircuit::point(const std::string& id) const {
  for (const auto& p : points)
    if (p.id == id) return p;
  fail(ErrorCode::UnknownPoint, "no point '" + id + "' in circuit");
}

bool SpacetimeCircuit::has_point(const std::string& id) const {
  for (const auto& p : points)
    if (p.id == id) return true;
  return false;
}

const SystemLabel& SpacetimeCircuit::system(const std::string& id) const {
  auto it = systems.find(id);
  require(it != systems.end(), ErrorCode::UnknownSystem,
          "no system '" + id + "' in circuit");
  return it->second;
}

std::vector<std::string> SpacetimeCircuit::input_points() const {
  std::vector<std::string> out;
  for (const auto& p : points)
    if (p.role == CircuitPoint::Role::Input) out.push_back(p.id);
  return out;
}

std::vector<std::string> SpacetimeCircuit::output_points() const {
  std::vector<std::string> out;
  for (const auto& p : points)
    if (p.role == CircuitPoint::Role::Output) out.push_back(p.id);
  return out;
}

std::vector<std::string> SpacetimeCircuit::gate_points() const {
  std::vector<std::string> out;
  for (const auto& p : points)
    if (p.role == CircuitPoint::Role::Gate) out.push_back(p.id);
  return out;
}

int SpacetimeCircuit::role_index(const std::string& id) const {
  const auto role = point(id).role;
  int n = 0;
  for (const auto& p : points) {
    if (p.role != role) continue;
    ++n;
    if (p.id == id) return n;
  }
  fail(ErrorCode::UnknownPoint, "no point '" + id + "' in circuit");
}

std::vector<std::string> in_set(const SpacetimeCircuit& circ,
                                const std::string& point_id) {
  require(circ.has_point(point_id), ErrorCode::UnknownPoint,
          "no point '" + point_id + "' in circuit");
  std::vector<std::string> out;
  for (const auto& e : circ.edges)
    if (e.to == point_id) out.push_back(e.from);
  return out;
}

std::vector<std::string> out_set(const SpacetimeCircuit& circ,
                                 const std::string& point_id) {
  require(circ.has_point(point_id), ErrorCode::UnknownPoint,
          "no point '" + point_id + "' in circuit");
  std::vector<std::string> out;
  for (const auto& e : circ.edges)
    if (e.from == point_id) out.push_back(e.to);
  return out;
}

std::vector<std::string> roots(const SpacetimeCircuit& circ,
                               const std::string& point_id) {
  require(circ.has_point(point_id), ErrorCode::UnknownPoint,
          "no point '" + point_id + "' in circuit");
  // Walk the edge relation backwards; a point reaches itself trivially.
  std::unordered_set<std::string> seen{point_id};
  std::vector<std::string> frontier{point_id};
  while (!frontier.empty()) {
    const std::string cur = frontier.back();
    frontier.pop_back();
    for (const auto& e : circ.edges)
      if (e.to == cur && seen.insert(e.from).second) frontier.push_back(e.from);
  }
  std::vector<std::string> out;
  for (const auto& p : circ.points)
    if (p.role == CircuitPoint::Role::Input && seen.count(p.id))
      out.push_back(p.id);
  return out;
}

std::vector<std::string> topological_order(const SpacetimeCircuit& circ) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(circ.points.size()); ++i)
    index[circ.points[i].id] = i;
  std::vector<int> indegree(circ.points.size(), 0);
  for (const auto& e : circ.edges)
    if (index.count(e.from) && index.count(e.to)) ++indegree[index[e.to]];

  // Kahn's algorithm; the ready set is drained in declaration order so the
  // result is stable across runs.
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (size_t i = 0; i < circ.points.size(); ++i)
    if (indegree[i] == 0) ready.push(static_cast<int>(i));
  std::vector<std::string> order;
  while (!ready.empty()) {
    const int i = ready.top();
    ready.pop();
    order.push_back(circ.points[i].id);
    for (const auto& e : circ.edges) {
      if (e.from != circ.points[i].id || !index.count(e.to)) continue;
      if (--indegree[index[e.to]] == 0) ready.push(index[e.to]);
    }
  }
  require(order.size() == circ.points.size(), ErrorCode::CycleDetected,
          "circuit graph contains a directed cycle");
  return order;
}

std::vector<SystemLabel> in_systems(const SpacetimeCircuit& circ,
                                    const std::string& point_id) {
  const auto& p = circ.point(point_id);
  std::vector<SystemLabel> out;
  for (const auto& e : circ.edges)
    if (e.to == point_id) out.push_back(circ.system(e.system));
  if (auto it = circ.input_system.find(p.id); it != circ.input_system.end())
    out.push_back(circ.system(it->second));
  if (auto it = circ.ancilla_system.find(p.id); it != circ.ancilla_system.end())
    for (const auto& sid : it->second) out.push_back(circ.system(sid));
  return out;
}

std::vector<SystemLabel> out_systems(const SpacetimeCircuit& circ,
                                     const std::string& point_id) {
  const auto& p = circ.point(point_id);
  std::vector<SystemLabel> out;
  for (const auto& e : circ.edges)
    if (e.from == point_id) out.push_back(circ.system(e.system));
  if (auto it = circ.output_system.find(p.id); it != circ.output_system.end())
    out.push_back(circ.system(it->second));
  return out;
}

namespace {

bool edge_pair_allowed(CircuitPoint::Role from, CircuitPoint::Role to) {
  using R = CircuitPoint::Role;
  if (from == R::Input) return to == R::Gate || to == R::Output;
  if (from == R::Gate) return to == R::Gate || to == R::Output;
  return false;
}

void check_one_binding(const SpacetimeCircuit& circ, ValidationReport& report,
                       const std::string& pid, const std::string& sid,
                       SystemLabel::Kind kind, int min_qubits,
                       const std::string& what) {
  if (!circ.has_point(pid)) {
    report.violations.push_back(
        {"UnknownPoint",
         what + " system bound to missing point '" + pid + "'"});
    return;
  }
  auto it = circ.systems.find(sid);
  if (it == circ.systems.end()) {
    report.violations.push_back(
        {"UnknownSystem",
         what + " system '" + sid + "' of point '" + pid + "' not declared"});
    return;
  }
  const SystemLabel& s = it->second;
  if (s.kind != kind)
    report.violations.push_back(
        {"BadSystemBinding", "system '" + sid + "' bound as " + what +
                                 " but declared as " +
                                 system_kind_name(s.kind)});
  if (s.qubits < min_qubits)
    report.violations.push_back(
        {"BadSystemBinding", what + " system '" + sid + "' is narrower than " +
                                 std::to_string(min_qubits) + " qubit(s)"});
  if (s.point != pid)
    report.violations.push_back(
        {"BadSystemBinding", what + " system '" + sid +
                                 "' carries anchor point '" + s.point +
                                 "' but is bound to '" + pid + "'"});
}

}  // namespace

ValidationReport validate(const SpacetimeCircuit& circ) {
  ValidationReport report;

  std::unordered_set<std::string> point_ids;
  for (const auto& p : circ.points) {
    if (!point_ids.insert(p.id).second)
      report.violations.push_back(
          {"DuplicatePoint", "point id '" + p.id + "' declared twice"});
    const bool mink = circ.spacetime.backend() == Spacetime::Backend::Minkowski2D;
    if (mink && p.at.kind != PointValue::Kind::Minkowski)
      report.violations.push_back(
          {"BackendMismatch",
           "point '" + p.id + "' names a causal-set element in Minkowski space"});
    if (!mink) {
      if (p.at.kind != PointValue::Kind::CausalSetElement)
        report.violations.push_back(
            {"BackendMismatch",
             "point '" + p.id + "' has coordinates but the spacetime is a causal set"});
      else if (!circ.spacetime.has_element(p.at.element))
        report.violations.push_back(
            {"UnknownElement", "point '" + p.id + "' sits on undeclared element '" +
                                   p.at.element + "'"});
    }
  }

  // Role bindings: every input point needs its input system, every output
  // point its output system; ancillas are optional.
  for (const auto& p : circ.points) {
    if (p.role == CircuitPoint::Role::Input && !circ.input_system.count(p.id))
      report.violations.push_back(
          {"MissingInputSystem", "input point '" + p.id + "' has no input system"});
    if (p.role == CircuitPoint::Role::Output && !circ.output_system.count(p.id))
      report.violations.push_back(
          {"MissingOutputSystem",
           "output point '" + p.id + "' has no output system"});
    if (p.role != CircuitPoint::Role::Input && circ.input_system.count(p.id))
      report.violations.push_back(
          {"BadSystemBinding", "non-input point '" + p.id + "' has an input system"});
    if (p.role != CircuitPoint::Role::Output && circ.output_system.count(p.id))
      report.violations.push_back(
          {"BadSystemBinding",
           "non-output point '" + p.id + "' has an output system"});
  }
  for (const auto& [pid, sid] : circ.input_system)
    check_one_binding(circ, report, pid, sid, SystemLabel::Kind::Input, 1,
                      "input");
  for (const auto& [pid, sid] : circ.output_system)
    check_one_binding(circ, report, pid, sid, SystemLabel::Kind::Output, 1,
                      "output");
  for (const auto& [pid, sids] : circ.ancilla_system)
    for (const auto& sid : sids)
      check_one_binding(circ, report, pid, sid, SystemLabel::Kind::Ancilla, 0,
                        "ancilla");

  std::set<std::pair<std::string, std::string>> edge_pairs;
  std::unordered_set<std::string> used_transits;
  for (const auto& e : circ.edges) {
    if (!circ.has_point(e.from) || !circ.has_point(e.to)) {
      report.violations.push_back(
          {"UnknownPoint", "edge (" + e.from + "," + e.to +
                               ") references an undeclared point"});
      continue;
    }
    const auto& from = circ.point(e.from);
    const auto& to = circ.point(e.to);
    if (!edge_pair_allowed(from.role, to.role))
      report.violations.push_back(
          {"IllegalEdgeTypePair", "edge (" + e.from + "," + e.to + ") connects " +
                                      point_role_name(from.role) + " to " +
                                      point_role_name(to.role)});
    if (from.at == to.at)
      report.violations.push_back(
          {"EdgeEndpointsCoincide",
           "edge (" + e.from + "," + e.to + ") joins co-located points"});
    else {
      bool causal = false;
      try {
        causal = circ.spacetime.precedes(from.at, to.at);
      } catch (const Error&) {
        causal = false;  // backend problems reported above
      }
      if (!causal)
        report.violations.push_back(
            {"EdgeNotCausal", "edge (" + e.from + "," + e.to +
                                  ") runs outside the light cone"});
    }
    if (!edge_pairs.insert({e.from, e.to}).second)
      report.violations.push_back(
          {"DuplicateEdge", "parallel edge (" + e.from + "," + e.to + ")"});
    auto it = circ.systems.find(e.system);
    if (it == circ.systems.end()) {
      report.violations.push_back(
          {"UnknownSystem", "edge (" + e.from + "," + e.to +
                                ") carries undeclared system '" + e.system + "'"});
    } else {
      const SystemLabel& s = it->second;
      if (s.kind != SystemLabel::Kind::Transit || s.qubits < 1)
        report.violations.push_back(
            {"BadTransitSystem",
             "edge system '" + e.system + "' must be a transit of width >= 1"});
      else if (s.edge_from != e.from || s.edge_to != e.to)
        report.violations.push_back(
            {"BadTransitSystem", "transit '" + e.system +
                                     "' carries a different edge anchor"});
      if (!used_transits.insert(e.system).second)
        report.violations.push_back(
            {"SharedTransitSystem",
             "transit '" + e.system + "' rides more than one edge"});
    }
  }

  bool acyclic = true;
  try {
    topological_order(circ);
  } catch (const Error&) {
    acyclic = false;
    report.violations.push_back(
        {"CycleDetected", "circuit graph contains a directed cycle"});
  }

  if (acyclic) {
    // Gates must sit on some input -> output path.
    std::unordered_set<std::string> from_input, to_output;
    for (const auto& p : circ.points) {
      if (p.role == CircuitPoint::Role::Input) from_input.insert(p.id);
      if (p.role == CircuitPoint::Role::Output) to_output.insert(p.id);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : circ.edges) {
        if (from_input.count(e.from) && !from_input.count(e.to) &&
            circ.has_point(e.to)) {
          from_input.insert(e.to);
          grew = true;
        }
        if (to_output.count(e.to) && !to_output.count(e.from) &&
            circ.has_point(e.from)) {
          to_output.insert(e.from);
          grew = true;
        }
      }
    }
    for (const auto& p : circ.points)
      if (p.role == CircuitPoint::Role::Gate &&
          (!from_input.count(p.id) || !to_output.count(p.id)))
        report.violations.push_back(
            {"OrphanGate",
             "gate '" + p.id + "' lies on no input-to-output path"});
  }

  // The prearranged state must cover exactly the declared ancilla systems.
  {
    std::set<std::string> bound, present;
    for (const auto& [pid, sids] : circ.ancilla_system)
      for (const auto& sid : sids) bound.insert(sid);
    for (const auto& l : circ.ancilla_state.legs) present.insert(l.id);
    if (bound != present)
      report.violations.push_back(
          {"AncillaStateMismatch",
           "prearranged state legs differ from the bound ancilla systems"});
    try {
      check_density(circ.ancilla_state, 1e-10,
                    circ.ancilla_state.dim() <= 256);
    } catch (const Error& err) {
      report.violations.push_back({"AncillaStateInvalid", err.what()});
    }
  }

  if (!circ.compiled()) {
    for (const auto& p : circ.points) {
      auto it = circ.channels.find(p.id);
      if (it == circ.channels.end()) {
        report.violations.push_back(
            {"MissingChannel", "point '" + p.id + "' has no channel"});
        continue;
      }
      const QuantumChannel& ch = it->second;
      auto expect_in = in_systems(circ, p.id);
      auto expect_out = out_systems(circ, p.id);
      auto ids_of = [](const std::vector<SystemLabel>& ls) {
        std::set<std::string> s;
        for (const auto& l : ls) s.insert(l.id);
        return s;
      };
      if (ids_of(ch.in_legs) != ids_of(expect_in))
        report.violations.push_back(
            {"ChannelLegMismatch",
             "channel at '" + p.id + "' does not consume exactly the incoming systems"});
      if (ids_of(ch.out_legs) != ids_of(expect_out))
        report.violations.push_back(
            {"ChannelLegMismatch",
             "channel at '" + p.id + "' does not produce exactly the outgoing systems"});
      for (const auto& l : ch.in_legs)
        if (circ.systems.count(l.id) && circ.systems.at(l.id).qubits != l.qubits)
          report.violations.push_back(
              {"ChannelLegMismatch", "channel at '" + p.id + "' disagrees on the width of '" +
                                         l.id + "'"});
      try {
        check_channel(ch);
      } catch (const Error& err) {
        report.violations.push_back({"BadChannel", err.what()});
      }
    }
    for (const auto& [pid, ch] : circ.channels)
      if (!circ.has_point(pid))
        report.violations.push_back(
            {"UnknownPoint", "channel bound to missing point '" + pid + "'"});
  } else {
    if (!circ.channels.empty())
      report.violations.push_back(
          {"CompiledChannelsPresent",
           "a scripted circuit must not also carry per-point channels"});
    if (!circ.gate_points().empty())
      report.violations.push_back(
          {"ScriptWithGates", "a scripted circuit must be gate-free"});
    else if (report.ok()) {
      try {
        validate_script(circ);
      } catch (const Error& err) {
        report.violations.push_back({"ScriptInvalid", err.what()});
      }
    }
  }

  return report;
}

void require_valid(const SpacetimeCircuit& circ) {
  const auto report = validate(circ);
  if (report.ok()) return;
  const auto& v = report.violations.front();
  std::string msg = v.code + ": " + v.detail;
  if (report.violations.size() > 1)
    msg += " (and " + std::to_string(report.violations.size() - 1) +
           " more violation(s))";
  fail(ErrorCode::InvalidCircuit, msg);
}

}  // namespace causalc
