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

#include "causalc/executor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "causalc/script.hpp"
#include "causalc/teleport.hpp"

namespace causalc {

namespace {

// One sampled pad together with the legs it was imprinted on.
struct PadPart {
  std::vector<std::string> leg_ids;
  PauliKey pad;
};

// Tracks where each script-level system lives inside the density state.
// `keys` has one entry per pending normal teleportation, innermost last;
// an entry holds several pads when merged systems shared a key trail.
struct ReplaySystem {
  std::vector<std::string> leg_ids;
  std::vector<std::vector<PadPart>> keys;
};

struct Replayer {
  const SpacetimeCircuit& circ;
  const SimOptions& opts;
  DensityState st;
  std::mt19937_64 rng;
  std::map<std::string, ReplaySystem> live;
  long fresh_counter = 0;

  Replayer(const SpacetimeCircuit& c, const SimOptions& o, DensityState init)
      : circ(c), opts(o), st(std::move(init)), rng(o.seed) {}

  ReplaySystem& get(const std::string& id) {
    auto it = live.find(id);
    require(it != live.end(), ErrorCode::InvalidScript,
            "replay lost track of system '" + id + "'");
    return it->second;
  }

  int system_qubits(const ReplaySystem& sys) {
    int n = 0;
    for (const auto& id : sys.leg_ids) n += st.legs[st.leg_index(id)].qubits;
    return n;
  }

  std::vector<SystemLabel> labels_of(const std::vector<std::string>& ids) {
    std::vector<SystemLabel> labels;
    for (const auto& lid : ids) labels.push_back(st.legs[st.leg_index(lid)]);
    return labels;
  }

  // One sampled normal teleportation: imprint a fresh pad on the system.
  void normal_teleport(const std::string& id) {
    ReplaySystem& sys = get(id);
    const int n = system_qubits(sys);
    PauliKey key = PauliKey::sample(n, rng);
    if (n > 0) st = apply_unitary(st, labels_of(sys.leg_ids), encrypt_word(key));
    sys.keys.push_back({{sys.leg_ids, std::move(key)}});
  }

  void normal_decrypt(const std::string& id) {
    ReplaySystem& sys = get(id);
    require(!sys.keys.empty(), ErrorCode::InvalidScript,
            "no pending key for system '" + id + "'");
    const std::vector<PadPart> entry = sys.keys.back();
    sys.keys.pop_back();
    for (const auto& part : entry)
      if (part.pad.qubits() > 0)
        st = apply_unitary(st, labels_of(part.leg_ids),
                           decrypt_word(part.pad));
  }

  // Physical finite-port teleportation of every leg of the system,
  // selecting the indicated port right away. The sender measurement
  // commutes with everything later steps do to other legs, so sampling
  // and selecting here is faithful to the protocol.
  void physical_port_teleport(const std::string& id) {
    const ReplaySystem& sys = get(id);
    const int ports = opts.physical_ports;
    for (const auto& lid : sys.leg_ids) {
      const SystemLabel leg = st.legs[st.leg_index(lid)];
      if (leg.qubits == 0) continue;
      require(leg.qubits == 1, ErrorCode::UnsupportedDimension,
              "physical port teleportation demonstrations move single-qubit "
              "parcels");
      const std::string tag = "pbt" + std::to_string(fresh_counter++) + ":";
      st = tensor(st, bell_pairs(ports, tag + "a", tag + "b"));
      std::vector<std::string> a_ids, b_ids;
      for (int i = 1; i <= ports; ++i) {
        a_ids.push_back(tag + "a" + std::to_string(i));
        b_ids.push_back(tag + "b" + std::to_string(i));
      }
      auto [next, key] = pbt_finite_send(st, lid, a_ids, b_ids, rng);
      st = std::move(next);
      std::vector<std::string> junk;
      for (long i = 1; i <= ports; ++i)
        if (i != key.index) junk.push_back(b_ids[i - 1]);
      st = partial_trace(st, junk);
      st = relabel_leg(st, b_ids[key.index - 1], leg);
    }
  }

  void run(const ScriptStep& step) {
    using K = ScriptStep::Kind;
    switch (step.kind) {
      case K::NormalTeleport:
        for (const auto& id : step.systems) normal_teleport(id);
        break;
      case K::PortTeleport:
        if (opts.physical_ports > 0)
          for (const auto& id : step.systems) physical_port_teleport(id);
        break;
      case K::NormalDecrypt:
        normal_decrypt(step.systems[0]);
        break;
      case K::PortDecrypt:
        break;  // idealized: the index was bookkeeping all along
      case K::ApplyChannel: {
        // The channel acts on the legs the operand parcels actually hold
        // (pass-through wiring may have kept older leg names), matched
        // position by position; trailing input legs are resident ancillas
        // and keep their own ids.
        QuantumChannel ch = *step.channel;
        std::vector<std::string> held;
        for (const auto& id : step.systems) {
          const ReplaySystem& sys = get(id);
          require(sys.keys.empty(), ErrorCode::InvalidScript,
                  "channel applied to '" + id + "' while a key is pending");
          held.insert(held.end(), sys.leg_ids.begin(), sys.leg_ids.end());
        }
        require(held.size() <= ch.in_legs.size(), ErrorCode::LegMismatch,
                "channel has fewer input legs than the operands hold");
        for (size_t i = 0; i < held.size(); ++i) {
          const SystemLabel& actual = st.legs[st.leg_index(held[i])];
          require(actual.qubits == ch.in_legs[i].qubits,
                  ErrorCode::DimensionMismatch,
                  "operand leg '" + held[i] + "' width differs from the " +
                      "channel's input leg " + std::to_string(i));
          ch.in_legs[i] = actual;
        }
        st = apply_channel(st, ch);
        ReplaySystem result;
        for (const auto& leg : ch.out_legs) result.leg_ids.push_back(leg.id);
        for (const auto& id : step.systems) live.erase(id);
        live.emplace(step.result, std::move(result));
        break;
      }
      case K::Merge: {
        ReplaySystem merged = get(step.systems[0]);
        const ReplaySystem& b = get(step.systems[1]);
        merged.leg_ids.insert(merged.leg_ids.end(), b.leg_ids.begin(),
                              b.leg_ids.end());
        // Validation guarantees the trails line up point by point; the
        // fused system owes both pads at every pending hop.
        require(merged.keys.size() == b.keys.size(), ErrorCode::InvalidScript,
                "merged systems disagree on pending keys");
        for (size_t i = 0; i < b.keys.size(); ++i)
          merged.keys[i].insert(merged.keys[i].end(), b.keys[i].begin(),
                                b.keys[i].end());
        live.erase(step.systems[0]);
        live.erase(step.systems[1]);
        live.emplace(step.result, std::move(merged));
        break;
      }
      case K::Split: {
        const ReplaySystem sys = get(step.systems[0]);
        require(sys.keys.empty(), ErrorCode::InvalidScript,
                "cannot cut a system while a key is pending");
        live.erase(step.systems[0]);
        for (const auto& [pid, legs] : step.parts) {
          ReplaySystem part;
          part.leg_ids = legs;
          live.emplace(pid, std::move(part));
        }
        break;
      }
      case K::SendPlain:
        break;  // location is annotation-level bookkeeping
      case K::EmitOutput: {
        const ReplaySystem sys = get(step.systems[0]);
        const SystemLabel& out =
            circ.system(circ.output_system.at(step.point));
        require(sys.keys.empty(), ErrorCode::InvalidScript,
                "output emitted while a key is pending");
        require(sys.leg_ids.size() == 1, ErrorCode::LegMismatch,
                "output must be a single parcel");
        if (sys.leg_ids[0] != out.id)
          st = relabel_leg(st, sys.leg_ids[0], out);
        live.erase(step.systems[0]);
        break;
      }
    }
  }
};

DensityState initial_state(const SpacetimeCircuit& circ,
                           std::vector<std::string>& mirror_ids) {
  DensityState st = scalar_state();
  for (const auto& pid : circ.input_points()) {
    const SystemLabel& input = circ.system(circ.input_system.at(pid));
    SystemLabel mirror{"mirror:" + input.id, SystemLabel::Kind::Reference,
                       input.qubits};
    mirror_ids.push_back(mirror.id);
    st = tensor(st, maximally_entangled(mirror, input));
  }
  if (!circ.ancilla_state.legs.empty() || circ.ancilla_state.dim() > 1)
    st = tensor(st, circ.ancilla_state);
  return st;
}

ChoiMatrix read_choi(const SpacetimeCircuit& circ, DensityState st,
                     const std::vector<std::string>& mirror_ids) {
  std::vector<std::string> order = mirror_ids;
  long out_dim = 1;
  for (const auto& pid : circ.output_points()) {
    const SystemLabel& out = circ.system(circ.output_system.at(pid));
    order.push_back(out.id);
    out_dim *= out.dim();
  }
  require(order.size() == st.legs.size(), ErrorCode::InvalidCircuit,
          "simulation finished with stray legs");
  st = permute_legs(st, order);

  long in_dim = 1;
  for (const auto& id : mirror_ids) in_dim *= st.legs[st.leg_index(id)].dim();
  ChoiMatrix c;
  c.in_dim = in_dim;
  c.out_dim = out_dim;
  c.matrix = st.matrix * static_cast<double>(in_dim);
  return c;
}

}  // namespace

ChoiMatrix effective_choi(const SpacetimeCircuit& circ,
                          const SimOptions& opts) {
  require_valid(circ);
  std::vector<std::string> mirrors;
  DensityState st = initial_state(circ, mirrors);

  if (!circ.compiled()) {
    for (const auto& pid : topological_order(circ))
      st = apply_channel(st, circ.channels.at(pid));
  } else {
    Replayer replay(circ, opts, std::move(st));
    for (const auto& pid : circ.input_points()) {
      const std::string& sid = circ.input_system.at(pid);
      ReplaySystem sys;
      sys.leg_ids = {sid};
      replay.live.emplace(sid, std::move(sys));
    }
    for (const auto& step : circ.script->steps) replay.run(step);
    st = std::move(replay.st);
  }
  return read_choi(circ, std::move(st), mirrors);
}

SimResult effective_channel(const SpacetimeCircuit& circ,
                            const SimOptions& opts) {
  SimResult result;
  result.choi = effective_choi(circ, opts);
  std::vector<SystemLabel> in_legs, out_legs;
  for (const auto& pid : circ.input_points())
    in_legs.push_back(circ.system(circ.input_system.at(pid)));
  for (const auto& pid : circ.output_points())
    out_legs.push_back(circ.system(circ.output_system.at(pid)));
  result.channel =
      kraus_from_choi(result.choi, std::move(in_legs), std::move(out_legs));
  return result;
}

}  // namespace causalc
