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

#include "causalc/compiler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace causalc {

bool operator==(const ResourceReport& a, const ResourceReport& b) {
  return a.normal_teleports == b.normal_teleports &&
         a.port_teleports == b.port_teleports &&
         a.max_port_depth == b.max_port_depth &&
         a.bell_pairs_ideal == b.bell_pairs_ideal &&
         a.classical_broadcasts == b.classical_broadcasts;
}

namespace {

// A parcel in flight, with a creation stamp so renderings and the crossing
// tie-break are deterministic.
struct Part {
  AnnotatedSystem ann;
  int birth = 0;
};

class GateRemover {
 public:
  explicit GateRemover(const SpacetimeCircuit& circ) : circ_(circ) {
    precedes_ = [this](const std::string& p, const std::string& q) {
      return circ_.spacetime.precedes(circ_.point(p).at, circ_.point(q).at);
    };
  }

  CompileResult run_all();
  AbsorbResult run_single(const std::string& gate,
                          const std::vector<std::vector<std::string>>& pre);

 private:
  std::string fresh_id() { return "s" + std::to_string(++fresh_); }

  Part make_part(AnnotatedSystem ann) {
    return Part{std::move(ann), next_birth_++};
  }

  std::vector<const CircuitEdge*> edges_in(const std::string& p) const {
    std::vector<const CircuitEdge*> found;
    for (const CircuitEdge& e : circ_.edges)
      if (e.to == p) found.push_back(&e);
    return found;
  }

  std::vector<const CircuitEdge*> edges_out(const std::string& p) const {
    std::vector<const CircuitEdge*> found;
    for (const CircuitEdge& e : circ_.edges)
      if (e.from == p) found.push_back(&e);
    return found;
  }

  // What a parcel on this wire is called. A wire into an output point that
  // has no other feed simply is that output's incoming set.
  std::string display_for_edge(const CircuitEdge& e) const {
    if (circ_.point(e.to).role == CircuitPoint::Role::Output &&
        in_set(circ_, e.to).size() == 1)
      return "S_{in}(" + e.to + ")";
    return "E_{(" + e.from + "," + e.to + ")}";
  }

  std::vector<SystemLabel> resident_labels(const std::string& point) const {
    std::vector<SystemLabel> labels;
    auto it = circ_.ancilla_system.find(point);
    if (it != circ_.ancilla_system.end())
      for (const std::string& id : it->second)
        labels.push_back(circ_.system(id));
    return labels;
  }

  void push(ScriptStep st) { script_.steps.push_back(std::move(st)); }

  // One rendered line: the given parcels (creation order) under their
  // shared port prefix, at a point.
  void trace_group(std::vector<const Part*> group, const std::string& at) {
    std::sort(group.begin(), group.end(),
              [](const Part* a, const Part* b) { return a->birth < b->birth; });
    std::vector<std::string> rendered;
    rendered.reserve(group.size());
    for (const Part* p : group) rendered.push_back(render_part(p->ann));
    trace_.push_back(render_group(group.front()->ann.port_prefix, rendered) +
                     " at " + at);
  }

  void trace_at(const std::vector<Part>& parts, const std::string& at) {
    std::vector<const Part*> group;
    for (const Part& p : parts)
      if (p.ann.location == at) group.push_back(&p);
    trace_group(std::move(group), at);
  }

  // Records that a parcel or key crosses (from, to); folded into one edge
  // of the compiled circuit.
  void note_message(const std::string& from, const std::string& to,
                    int qubits) {
    auto key = std::make_pair(from, to);
    auto it = message_width_.find(key);
    if (it == message_width_.end()) {
      message_order_.push_back(key);
      message_width_.emplace(std::move(key), qubits);
    } else {
      it->second += qubits;
    }
  }

  void emit_nt(const std::vector<Part*>& moving, const std::string& from,
               const std::string& to) {
    ScriptStep st;
    st.kind = ScriptStep::Kind::NormalTeleport;
    st.from = from;
    st.to = to;
    int qubits = 0;
    for (Part* p : moving) {
      st.systems.push_back(p->ann.id);
      qubits += p->ann.total_qubits();
    }
    push(std::move(st));
    res_.normal_teleports += 1;
    res_.bell_pairs_ideal += qubits;
    for (Part* p : moving) ann_normal_teleport(p->ann, from, to);
  }

  // Brings every parcel to one point, hopping along the distinct starting
  // locations in first-appearance order; each hop carries everything
  // gathered so far and leaves its key behind on the suffixes.
  std::string gather(std::vector<Part>& parts) {
    std::vector<std::string> locs;
    for (const Part& p : parts)
      if (std::find(locs.begin(), locs.end(), p.ann.location) == locs.end())
        locs.push_back(p.ann.location);
    for (size_t i = 0; i + 1 < locs.size(); ++i) {
      std::vector<Part*> moving;
      for (Part& p : parts)
        if (p.ann.location == locs[i]) moving.push_back(&p);
      emit_nt(moving, locs[i], locs[i + 1]);
      trace_at(parts, locs[i + 1]);
    }
    return locs.back();
  }

  void pop_local_keys(std::vector<Part>& parts, const std::string& at) {
    for (Part& p : parts) {
      while (!p.ann.normal_suffix.empty() && p.ann.normal_suffix.back() == at) {
        ScriptStep st;
        st.kind = ScriptStep::Kind::NormalDecrypt;
        st.systems = {p.ann.id};
        st.point = at;
        push(std::move(st));
        ann_decrypt(p.ann, at, KeyKind::Normal, precedes_);
        trace_at(parts, at);
      }
    }
  }

  // Port-teleports the whole bundle from key point to key point until no
  // ordinary key is left. Each hop targets the innermost key of the deepest
  // stack (ties to the youngest parcel), which is the only key order the
  // last-in-first-out rule allows. Returns the point where the bundle comes
  // to rest: the channel applies there.
  std::string cross(std::vector<Part>& parts, std::string cur) {
    pop_local_keys(parts, cur);
    for (;;) {
      Part* pick = nullptr;
      for (Part& p : parts) {
        if (p.ann.normal_suffix.empty()) continue;
        if (!pick ||
            p.ann.normal_suffix.size() > pick->ann.normal_suffix.size() ||
            (p.ann.normal_suffix.size() == pick->ann.normal_suffix.size() &&
             p.birth > pick->birth))
          pick = &p;
      }
      if (!pick) break;
      std::string target = pick->ann.normal_suffix.back();
      ScriptStep st;
      st.kind = ScriptStep::Kind::PortTeleport;
      for (const Part& p : parts) st.systems.push_back(p.ann.id);
      st.from = cur;
      st.to = target;
      push(std::move(st));
      res_.port_teleports += 1;
      for (Part& p : parts) ann_port_teleport(p.ann, cur, target);
      res_.max_port_depth =
          std::max(res_.max_port_depth,
                   static_cast<int>(parts.front().ann.port_prefix.size()));
      cur = target;
      trace_at(parts, cur);
      pop_local_keys(parts, cur);
    }
    return cur;
  }

  // Applies `owner`'s channel to the parcels (in order) plus the resident
  // legs, at `at`. Consumes the parcels; traces the result in channel form.
  Part emit_apply(const std::string& owner, const std::string& at,
                  std::vector<Part> ops,
                  const std::vector<SystemLabel>& resident,
                  const QuantumChannel& ch) {
    std::vector<AnnotatedSystem> anns;
    std::string displays;
    ScriptStep st;
    st.kind = ScriptStep::Kind::ApplyChannel;
    for (Part& p : ops) {
      anns.push_back(p.ann);
      displays += p.ann.display;
      st.systems.push_back(p.ann.id);
    }
    std::string rid = fresh_id();
    std::string lam = "\\Lambda_{" + owner + "}(" + displays + ")";
    AnnotatedSystem res = ann_apply_channel(anns, resident, ch, at, rid, lam);
    st.point = at;
    st.result = rid;
    st.channel = ch;
    push(std::move(st));
    Part rp = make_part(std::move(res));
    trace_group({&rp}, at);
    return rp;
  }

  // Renames the applied result to its settled per-wire form and, when the
  // owner has several outgoing wires, cuts it one parcel per wire.
  std::vector<Part> cut_per_edge(Part whole,
                                 const std::vector<const CircuitEdge*>& outs) {
    std::string settled;
    for (const CircuitEdge* e : outs) settled += display_for_edge(*e);
    whole.ann.display = settled;
    trace_group({&whole}, whole.ann.location);
    std::vector<Part> pieces;
    if (outs.size() == 1) {
      pieces.push_back(std::move(whole));
      return pieces;
    }
    ScriptStep sp;
    sp.kind = ScriptStep::Kind::Split;
    sp.systems = {whole.ann.id};
    std::vector<SplitPart> cuts;
    for (const CircuitEdge* e : outs) {
      SplitPart cut;
      cut.id = fresh_id();
      cut.legs = 1;
      cut.display = display_for_edge(*e);
      sp.parts.emplace_back(cut.id, std::vector<std::string>{e->system});
      cuts.push_back(std::move(cut));
    }
    push(std::move(sp));
    for (AnnotatedSystem& piece : ann_split(whole.ann, cuts))
      pieces.push_back(make_part(std::move(piece)));
    return pieces;
  }

  // Sends an output-bound parcel to its destination still port-encrypted
  // and broadcasts each key to meet it there.
  void route_to_output(Part part, const std::string& from,
                       const CircuitEdge& e) {
    const std::string& r = e.to;
    ScriptStep st;
    st.kind = ScriptStep::Kind::SendPlain;
    st.systems = {part.ann.id};
    st.from = from;
    st.to = r;
    push(std::move(st));
    note_message(from, r, part.ann.total_qubits());
    ann_send_plain(part.ann, from, r, precedes_);
    trace_group({&part}, r);
    std::vector<std::string> keys = part.ann.port_prefix;
    for (const std::string& q : keys) {
      ScriptStep pd;
      pd.kind = ScriptStep::Kind::PortDecrypt;
      pd.systems = {part.ann.id};
      pd.point = q;
      push(std::move(pd));
      note_message(q, r, 1);
      res_.classical_broadcasts += 1;
      ann_decrypt(part.ann, q, KeyKind::Port, precedes_);
      trace_group({&part}, r);
    }
    realized_.emplace(e.system, std::move(part));
  }

  // Walks the bundle back across the port-key points, newest key first,
  // stripping every port key; ordinary keys accumulate instead and stay.
  void shed(const std::vector<Part*>& bundle, std::string cur) {
    if (bundle.empty()) return;
    std::vector<std::string> visit;
    const std::vector<std::string>& prefix = bundle.front()->ann.port_prefix;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
      if (std::find(visit.begin(), visit.end(), *it) == visit.end())
        visit.push_back(*it);
    for (const std::string& v : visit) {
      emit_nt(bundle, cur, v);
      trace_group({bundle.begin(), bundle.end()}, v);
      for (Part* p : bundle) {
        while (std::find(p->ann.port_prefix.begin(), p->ann.port_prefix.end(),
                         v) != p->ann.port_prefix.end()) {
          ScriptStep pd;
          pd.kind = ScriptStep::Kind::PortDecrypt;
          pd.systems = {p->ann.id};
          pd.point = v;
          push(std::move(pd));
          ann_decrypt(p->ann, v, KeyKind::Port, precedes_);
          trace_group({bundle.begin(), bundle.end()}, v);
        }
      }
      cur = v;
    }
  }

  // Stage one of the full pass: run every input point's channel (or wave
  // the parcel through when the channel is an unadorned identity wire) and
  // register one parcel per outgoing edge. Parcels already bound for an
  // output point leave immediately.
  void seed_inputs() {
    for (const std::string& c : circ_.input_points()) {
      const SystemLabel& in_label = circ_.system(circ_.input_system.at(c));
      const QuantumChannel& ch = circ_.channels.at(c);
      std::vector<const CircuitEdge*> outs = edges_out(c);
      std::vector<SystemLabel> resident = resident_labels(c);

      AnnotatedSystem op;
      op.id = in_label.id;
      op.base = {in_label};
      op.location = c;
      op.display = "I_" + std::to_string(circ_.role_index(c));

      std::vector<Part> pieces;
      if (resident.empty() && outs.size() == 1 && is_identity_channel(ch)) {
        pieces.push_back(make_part(std::move(op)));
      } else {
        std::vector<Part> ops;
        ops.push_back(make_part(std::move(op)));
        Part rp = emit_apply(c, c, std::move(ops), resident, ch);
        pieces = cut_per_edge(std::move(rp), outs);
      }
      for (size_t i = 0; i < outs.size(); ++i) {
        const CircuitEdge& e = *outs[i];
        if (circ_.point(e.to).role == CircuitPoint::Role::Output)
          route_to_output(std::move(pieces[i]), c, e);
        else
          realized_.emplace(e.system, std::move(pieces[i]));
      }
    }
  }

  void absorb_for_pass(const std::string& gate) {
    std::vector<Part> parts;
    for (const CircuitEdge* e : edges_in(gate)) {
      auto it = realized_.find(e->system);
      require(it != realized_.end(), ErrorCode::InvalidCircuit,
              "internal: wire " + e->system + " not realized before " + gate);
      parts.push_back(std::move(it->second));
      realized_.erase(it);
    }
    std::string end = gather(parts);
    std::string at = cross(parts, end);

    std::vector<SystemLabel> resident = resident_labels(gate);
    for (const SystemLabel& lab : resident) ancilla_anchor_[lab.id] = at;
    Part result = emit_apply(gate, at, std::move(parts), resident,
                             circ_.channels.at(gate));
    std::vector<Part> pieces = cut_per_edge(std::move(result),
                                            edges_out(gate));

    std::vector<const CircuitEdge*> outs = edges_out(gate);
    std::vector<Part*> remainder;
    for (size_t i = 0; i < outs.size(); ++i) {
      const CircuitEdge& e = *outs[i];
      if (circ_.point(e.to).role == CircuitPoint::Role::Output) {
        route_to_output(std::move(pieces[i]), at, e);
      } else {
        auto [it, inserted] = realized_.emplace(e.system, std::move(pieces[i]));
        require(inserted, ErrorCode::InvalidCircuit,
                "internal: wire " + e.system + " realized twice");
        remainder.push_back(&it->second);
      }
    }
    shed(remainder, at);
  }

  // Stage three: hand every output point its parcels and run its channel
  // (or emit directly when it is an unadorned identity wire).
  void finish_outputs() {
    for (const std::string& r : circ_.output_points()) {
      std::vector<const CircuitEdge*> ins = edges_in(r);
      require(!ins.empty(), ErrorCode::InvalidCircuit,
              "output point " + r + " receives no wire");
      std::vector<Part> parts;
      for (const CircuitEdge* e : ins) {
        auto it = realized_.find(e->system);
        require(it != realized_.end(), ErrorCode::InvalidCircuit,
                "internal: wire " + e->system + " never delivered to " + r);
        parts.push_back(std::move(it->second));
        realized_.erase(it);
      }
      const QuantumChannel& ch = circ_.channels.at(r);
      std::vector<SystemLabel> resident = resident_labels(r);

      std::string final_id;
      if (resident.empty() && parts.size() == 1 && is_identity_channel(ch)) {
        final_id = parts.front().ann.id;
      } else {
        Part rp = emit_apply(r, r, std::move(parts), resident, ch);
        rp.ann.display = "O_" + std::to_string(circ_.role_index(r));
        trace_group({&rp}, r);
        final_id = rp.ann.id;
      }
      ScriptStep st;
      st.kind = ScriptStep::Kind::EmitOutput;
      st.systems = {final_id};
      st.point = r;
      push(std::move(st));
    }
  }

  SpacetimeCircuit build_compiled() const {
    SpacetimeCircuit out;
    out.spacetime = circ_.spacetime;
    for (const CircuitPoint& p : circ_.points)
      if (p.role != CircuitPoint::Role::Gate) out.points.push_back(p);
    out.input_system = circ_.input_system;
    out.output_system = circ_.output_system;
    for (const auto& [pid, sid] : circ_.input_system)
      out.systems.emplace(sid, circ_.system(sid));
    for (const auto& [pid, sid] : circ_.output_system)
      out.systems.emplace(sid, circ_.system(sid));

    int wires = 0;
    for (const auto& key : message_order_) {
      SystemLabel lab;
      lab.id = "m" + std::to_string(++wires);
      lab.kind = SystemLabel::Kind::Transit;
      lab.qubits = message_width_.at(key);
      lab.edge_from = key.first;
      lab.edge_to = key.second;
      out.systems.emplace(lab.id, lab);
      out.edges.push_back(CircuitEdge{key.first, key.second, lab.id});
    }

    for (const auto& [pid, ids] : circ_.ancilla_system) {
      for (const std::string& id : ids) {
        auto moved = ancilla_anchor_.find(id);
        std::string anchor =
            moved == ancilla_anchor_.end() ? pid : moved->second;
        SystemLabel lab = circ_.system(id);
        lab.point = anchor;
        out.systems.emplace(lab.id, lab);
        out.ancilla_system[anchor].push_back(id);
      }
    }
    DensityState anc = circ_.ancilla_state;
    for (SystemLabel& leg : anc.legs) {
      auto moved = ancilla_anchor_.find(leg.id);
      if (moved != ancilla_anchor_.end()) leg.point = moved->second;
    }
    out.ancilla_state = std::move(anc);
    out.script = script_;
    return out;
  }

  const SpacetimeCircuit& circ_;
  PrecedesFn precedes_;
  Script script_;
  ResourceReport res_;
  std::vector<std::string> trace_;
  std::map<std::string, Part> realized_;  // wire system id -> parcel on it
  std::map<std::pair<std::string, std::string>, int> message_width_;
  std::vector<std::pair<std::string, std::string>> message_order_;
  std::map<std::string, std::string> ancilla_anchor_;
  int fresh_ = 0;
  int next_birth_ = 0;
};

CompileResult GateRemover::run_all() {
  require_valid(circ_);
  if (circ_.gate_points().empty())
    return CompileResult{circ_, ResourceReport{}, {}};

  seed_inputs();
  std::vector<std::string> gates = circ_.gate_points();
  std::set<std::string> done;
  while (done.size() < gates.size()) {
    std::string pick;
    for (const std::string& g : gates) {
      if (done.count(g)) continue;
      bool ready = true;
      for (const CircuitEdge* e : edges_in(g)) {
        const CircuitPoint& src = circ_.point(e->from);
        if (src.role == CircuitPoint::Role::Gate && !done.count(e->from)) {
          ready = false;
          break;
        }
      }
      if (ready) {
        pick = g;
        break;
      }
    }
    require(!pick.empty(), ErrorCode::CycleDetected,
            "internal: no gate has all feeds available");
    absorb_for_pass(pick);
    done.insert(pick);
  }
  finish_outputs();
  require(realized_.empty(), ErrorCode::InvalidCircuit,
          "internal: parcels left over after compilation");

  CompileResult out;
  out.circuit = build_compiled();
  out.resources = res_;
  out.trace = trace_;
  require_valid(out.circuit);
  return out;
}

AbsorbResult GateRemover::run_single(
    const std::string& gate,
    const std::vector<std::vector<std::string>>& pre) {
  require_valid(circ_);
  require(circ_.point(gate).role == CircuitPoint::Role::Gate,
          ErrorCode::HypothesisViolated, "'" + gate + "' is not a gate point");
  std::vector<const CircuitEdge*> ins = edges_in(gate);
  require(pre.empty() || pre.size() == ins.size(), ErrorCode::ArityMismatch,
          "one key list per incoming edge, in declaration order");
  std::vector<std::string> rts = roots(circ_, gate);
  auto is_root = [&](const std::string& p) {
    return std::find(rts.begin(), rts.end(), p) != rts.end();
  };

  std::vector<Part> parts;
  for (size_t i = 0; i < ins.size(); ++i) {
    const CircuitEdge& e = *ins[i];
    require(circ_.point(e.from).role == CircuitPoint::Role::Input,
            ErrorCode::HypothesisViolated,
            "edge from gate '" + e.from +
                "': absorb predecessors first (remove_all_gates does)");
    AnnotatedSystem ann;
    ann.id = e.system;
    ann.base = {circ_.system(e.system)};
    ann.location = e.from;
    ann.display = display_for_edge(e);
    Part part = make_part(std::move(ann));
    if (!pre.empty() && !pre[i].empty()) {
      const std::vector<std::string>& suffix = pre[i];
      for (const std::string& q : suffix)
        require(is_root(q), ErrorCode::HypothesisViolated,
                "key point '" + q + "' is not a root of '" + gate + "'");
      require(suffix.front() == e.from, ErrorCode::HypothesisViolated,
              "the first key must be the edge's source so the declared "
              "encryption can be realized by prologue teleports");
      for (size_t j = 1; j < suffix.size(); ++j) {
        emit_nt({&part}, suffix[j - 1], suffix[j]);
        trace_group({&part}, suffix[j]);
      }
      emit_nt({&part}, suffix.back(), e.from);
      trace_group({&part}, e.from);
    }
    parts.push_back(std::move(part));
  }

  std::string end = gather(parts);
  std::string at = cross(parts, end);

  std::vector<SystemLabel> resident = resident_labels(gate);
  for (const SystemLabel& lab : resident) ancilla_anchor_[lab.id] = at;
  Part result =
      emit_apply(gate, at, std::move(parts), resident, circ_.channels.at(gate));
  std::string settled;
  for (const CircuitEdge* e : edges_out(gate)) settled += display_for_edge(*e);
  result.ann.display = settled;
  trace_group({&result}, at);

  shed({&result}, at);

  AbsorbResult out;
  out.script = std::move(script_);
  out.result = std::move(result.ann);
  out.resources = res_;
  out.trace = std::move(trace_);
  return out;
}

}  // namespace

AbsorbResult absorb_gate(
    const SpacetimeCircuit& circ, const std::string& gate,
    const std::vector<std::vector<std::string>>& pre_encryption) {
  GateRemover remover(circ);
  return remover.run_single(gate, pre_encryption);
}

CompileResult remove_all_gates(const SpacetimeCircuit& circ) {
  GateRemover remover(circ);
  return remover.run_all();
}

SpacetimeCircuit transfer(const SpacetimeCircuit& gate_free, const Task& onto) {
  check_task(onto);
  require_valid(gate_free);
  require(gate_free.gate_points().empty(), ErrorCode::GatePointsPresent,
          "only gate-free circuits can be re-seated");
  std::vector<std::string> cin = gate_free.input_points();
  std::vector<std::string> cout = gate_free.output_points();
  require(cin.size() == onto.inputs.size() &&
              cout.size() == onto.outputs.size(),
          ErrorCode::CoarseMismatch,
          "circuit and task disagree on point counts");
  CoarseSignature want = coarse_signature(onto);
  for (size_t i = 0; i < cin.size(); ++i)
    for (size_t j = 0; j < cout.size(); ++j) {
      bool have = gate_free.spacetime.precedes(
          gate_free.point(cin[i]).at, gate_free.point(cout[j]).at);
      require(have == want.at(static_cast<int>(i), static_cast<int>(j)),
              ErrorCode::CoarseMismatch,
              "input " + std::to_string(i + 1) + " / output " +
                  std::to_string(j + 1) +
                  " precedence differs between circuit and task");
    }

  std::map<std::string, std::string> pmap;
  std::map<std::string, PointValue> at_of;
  for (size_t i = 0; i < cin.size(); ++i) {
    pmap[cin[i]] = onto.inputs[i].id;
    at_of[onto.inputs[i].id] = onto.inputs[i].at;
  }
  for (size_t j = 0; j < cout.size(); ++j) {
    pmap[cout[j]] = onto.outputs[j].id;
    at_of[onto.outputs[j].id] = onto.outputs[j].at;
  }
  auto map_point = [&](const std::string& id) -> std::string {
    auto it = pmap.find(id);
    return it == pmap.end() ? id : it->second;
  };
  auto map_label = [&](SystemLabel lab) {
    lab.point = map_point(lab.point);
    lab.edge_from = map_point(lab.edge_from);
    lab.edge_to = map_point(lab.edge_to);
    return lab;
  };
  auto map_channel = [&](QuantumChannel ch) {
    for (SystemLabel& l : ch.in_legs) l = map_label(l);
    for (SystemLabel& l : ch.out_legs) l = map_label(l);
    return ch;
  };

  SpacetimeCircuit out;
  out.spacetime = onto.spacetime;
  for (const CircuitPoint& p : gate_free.points) {
    CircuitPoint np;
    np.id = pmap.at(p.id);
    np.role = p.role;
    np.at = at_of.at(np.id);
    out.points.push_back(std::move(np));
  }
  for (const CircuitEdge& e : gate_free.edges)
    out.edges.push_back(
        CircuitEdge{map_point(e.from), map_point(e.to), e.system});
  for (const auto& [id, lab] : gate_free.systems)
    out.systems.emplace(id, map_label(lab));
  for (const auto& [pid, sid] : gate_free.input_system)
    out.input_system.emplace(map_point(pid), sid);
  for (const auto& [pid, sid] : gate_free.output_system)
    out.output_system.emplace(map_point(pid), sid);
  for (const auto& [pid, ids] : gate_free.ancilla_system)
    out.ancilla_system.emplace(map_point(pid), ids);
  out.ancilla_state = gate_free.ancilla_state;
  for (SystemLabel& leg : out.ancilla_state.legs) leg = map_label(leg);
  for (const auto& [pid, ch] : gate_free.channels)
    out.channels.emplace(map_point(pid), map_channel(ch));
  if (gate_free.script) {
    Script sc = *gate_free.script;
    for (ScriptStep& st : sc.steps) {
      st.from = map_point(st.from);
      st.to = map_point(st.to);
      st.point = map_point(st.point);
      if (st.channel) *st.channel = map_channel(*st.channel);
    }
    out.script = std::move(sc);
  }
  require_valid(out);
  return out;
}

}  // namespace causalc
