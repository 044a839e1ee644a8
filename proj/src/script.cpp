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

#include "causalc/script.hpp"

#include <map>
#include <set>

#include "causalc/annotation.hpp"
#include "causalc/circuit.hpp"

namespace causalc {

const char* script_step_kind_name(ScriptStep::Kind kind) {
  switch (kind) {
    case ScriptStep::Kind::NormalTeleport: return "normal_teleport";
    case ScriptStep::Kind::PortTeleport: return "port_teleport";
    case ScriptStep::Kind::NormalDecrypt: return "normal_decrypt";
    case ScriptStep::Kind::PortDecrypt: return "port_decrypt";
    case ScriptStep::Kind::ApplyChannel: return "apply_channel";
    case ScriptStep::Kind::Merge: return "merge";
    case ScriptStep::Kind::Split: return "split";
    case ScriptStep::Kind::SendPlain: return "send_plain";
    case ScriptStep::Kind::EmitOutput: return "emit_output";
  }
  return "?";
}

namespace {

struct Replay {
  const SpacetimeCircuit& circ;
  PrecedesFn precedes;
  std::map<std::string, AnnotatedSystem> live;
  // Prearranged systems still waiting at each point.
  std::map<std::string, std::vector<SystemLabel>> resident;
  std::set<std::string> emitted_points;

  explicit Replay(const SpacetimeCircuit& c) : circ(c) {
    precedes = [&circ = circ](const std::string& a, const std::string& b) {
      return circ.spacetime.precedes(circ.point(a).at, circ.point(b).at);
    };
    for (const auto& pid : circ.input_points()) {
      const std::string& sid = circ.input_system.at(pid);
      AnnotatedSystem a;
      a.id = sid;
      a.base = {circ.system(sid)};
      a.location = pid;
      a.display = "I_" + std::to_string(circ.role_index(pid));
      live.emplace(sid, std::move(a));
    }
    for (const auto& [pid, sids] : circ.ancilla_system)
      for (const auto& sid : sids) resident[pid].push_back(circ.system(sid));
  }

  AnnotatedSystem& get(const std::string& sid) {
    auto it = live.find(sid);
    require(it != live.end(), ErrorCode::InvalidScript,
            "step operates on unknown or consumed system '" + sid + "'");
    return it->second;
  }

  void fresh(const std::string& sid) {
    require(!live.count(sid), ErrorCode::InvalidScript,
            "step reuses the live system id '" + sid + "'");
  }

  void need_point(const std::string& pid, const std::string& what) {
    require(circ.has_point(pid), ErrorCode::InvalidScript,
            "step names unknown " + what + " point '" + pid + "'");
  }

  bool has_edge(const std::string& from, const std::string& to) const {
    for (const auto& e : circ.edges)
      if (e.from == from && e.to == to) return true;
    return false;
  }

  void need_edge(const std::string& from, const std::string& to,
                 const std::string& what) {
    require(has_edge(from, to), ErrorCode::InvalidScript,
            "no edge carries the " + what + " from '" + from + "' to '" + to +
                "'");
  }

  void run(const ScriptStep& step) {
    using K = ScriptStep::Kind;
    switch (step.kind) {
      case K::NormalTeleport:
      case K::PortTeleport: {
        require(!step.systems.empty(), ErrorCode::InvalidScript,
                "teleport step moves no systems");
        need_point(step.from, "departure");
        need_point(step.to, "arrival");
        for (const auto& sid : step.systems) {
          AnnotatedSystem& a = get(sid);
          if (step.kind == K::NormalTeleport)
            ann_normal_teleport(a, step.from, step.to);
          else
            ann_port_teleport(a, step.from, step.to);
        }
        break;
      }
      case K::NormalDecrypt:
      case K::PortDecrypt: {
        require(step.systems.size() == 1, ErrorCode::InvalidScript,
                "decrypt step takes exactly one system");
        need_point(step.point, "key");
        AnnotatedSystem& a = get(step.systems[0]);
        const auto kind = step.kind == K::NormalDecrypt ? KeyKind::Normal
                                                        : KeyKind::Port;
        // A nonlocal key ride needs a classical wire in the circuit.
        if (a.location != step.point)
          need_edge(step.point, a.location, "key");
        ann_decrypt(a, step.point, kind, precedes);
        break;
      }
      case K::ApplyChannel: {
        require(step.channel.has_value(), ErrorCode::InvalidScript,
                "channel step carries no channel");
        require(!step.result.empty(), ErrorCode::InvalidScript,
                "channel step names no result system");
        need_point(step.point, "application");
        check_channel(*step.channel);
        std::vector<AnnotatedSystem> operands;
        int operand_legs = 0;
        for (const auto& sid : step.systems) {
          operands.push_back(get(sid));
          operand_legs += static_cast<int>(operands.back().base.size());
        }
        // Whatever the channel consumes beyond the operands must be sitting
        // prearranged at the application point.
        std::vector<SystemLabel> extra;
        require(static_cast<int>(step.channel->in_legs.size()) >= operand_legs,
                ErrorCode::LegMismatch,
                "channel consumes fewer legs than its operands offer");
        auto& pool = resident[step.point];
        for (size_t i = operand_legs; i < step.channel->in_legs.size(); ++i) {
          const auto& leg = step.channel->in_legs[i];
          bool found = false;
          for (auto it = pool.begin(); it != pool.end(); ++it) {
            if (it->id == leg.id) {
              extra.push_back(*it);
              pool.erase(it);
              found = true;
              break;
            }
          }
          require(found, ErrorCode::InvalidScript,
                  "channel consumes '" + leg.id +
                      "' which is not prearranged at '" + step.point + "'");
        }
        AnnotatedSystem result = ann_apply_channel(
            operands, extra, *step.channel, step.point, step.result,
            step.result);
        for (const auto& sid : step.systems) live.erase(sid);
        fresh(step.result);
        live.emplace(step.result, std::move(result));
        break;
      }
      case K::Merge: {
        require(step.systems.size() == 2, ErrorCode::InvalidScript,
                "merge step takes exactly two systems");
        require(!step.result.empty(), ErrorCode::InvalidScript,
                "merge step names no result system");
        AnnotatedSystem merged =
            ann_merge(get(step.systems[0]), get(step.systems[1]), step.result);
        live.erase(step.systems[0]);
        live.erase(step.systems[1]);
        fresh(step.result);
        live.emplace(step.result, std::move(merged));
        break;
      }
      case K::Split: {
        require(step.systems.size() == 1, ErrorCode::InvalidScript,
                "split step takes exactly one system");
        require(!step.parts.empty(), ErrorCode::InvalidScript,
                "split step lists no parts");
        AnnotatedSystem a = get(step.systems[0]);
        std::vector<SplitPart> parts;
        size_t cursor = 0;
        for (const auto& [pid, legs] : step.parts) {
          require(!legs.empty(), ErrorCode::InvalidScript,
                  "split part '" + pid + "' covers no legs");
          for (const auto& leg : legs) {
            require(cursor < a.base.size() && a.base[cursor].id == leg,
                    ErrorCode::InvalidScript,
                    "split parts must list the operand's legs in order");
            ++cursor;
          }
          parts.push_back({pid, static_cast<int>(legs.size()), pid});
        }
        require(cursor == a.base.size(), ErrorCode::LegMismatch,
                "split parts do not cover system '" + a.id + "'");
        auto pieces = ann_split(a, parts);
        live.erase(step.systems[0]);
        for (auto& piece : pieces) {
          fresh(piece.id);
          live.emplace(piece.id, std::move(piece));
        }
        break;
      }
      case K::SendPlain: {
        require(!step.systems.empty(), ErrorCode::InvalidScript,
                "send step moves no systems");
        need_point(step.from, "departure");
        need_point(step.to, "arrival");
        need_edge(step.from, step.to, "payload");
        for (const auto& sid : step.systems)
          ann_send_plain(get(sid), step.from, step.to, precedes);
        break;
      }
      case K::EmitOutput: {
        require(step.systems.size() == 1, ErrorCode::InvalidScript,
                "output step takes exactly one system");
        need_point(step.point, "output");
        auto bind = circ.output_system.find(step.point);
        require(bind != circ.output_system.end(), ErrorCode::InvalidScript,
                "'" + step.point + "' is not an output point");
        require(!emitted_points.count(step.point), ErrorCode::InvalidScript,
                "output at '" + step.point + "' produced twice");
        const AnnotatedSystem& a = get(step.systems[0]);
        require(a.location == step.point, ErrorCode::LocationMismatch,
                "system '" + a.id + "' sits at '" + a.location +
                    "', not at the output point '" + step.point + "'");
        require(a.normal_suffix.empty(), ErrorCode::NormalEncryptionPresent,
                "output at '" + step.point + "' is still encrypted");
        require(a.port_prefix.empty(), ErrorCode::InvalidScript,
                "output at '" + step.point + "' has port keys outstanding");
        require(a.base.size() == 1, ErrorCode::LegMismatch,
                "output at '" + step.point + "' must be a single parcel");
        const SystemLabel& out = circ.system(bind->second);
        require(a.base[0].qubits == out.qubits, ErrorCode::DimensionMismatch,
                "output at '" + step.point + "' has the wrong width");
        live.erase(step.systems[0]);
        emitted_points.insert(step.point);
        break;
      }
    }
  }
};

}  // namespace

void validate_script(const SpacetimeCircuit& circ) {
  require(circ.script.has_value(), ErrorCode::InvalidScript,
          "circuit carries no script");
  Replay replay(circ);
  for (const auto& step : circ.script->steps) replay.run(step);
  for (const auto& pid : circ.output_points())
    require(replay.emitted_points.count(pid), ErrorCode::InvalidScript,
            "script never produces the output at '" + pid + "'");
  require(replay.live.empty(), ErrorCode::InvalidScript,
          "script leaves systems unaccounted for");
  for (const auto& [pid, pool] : replay.resident)
    require(pool.empty(), ErrorCode::InvalidScript,
            "prearranged system at '" + pid + "' is never consumed");
}

}  // namespace causalc
