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
// Bookkeeping for systems moved around by teleportation. Each tracked system
// remembers which classical keys are still outstanding: `normal_suffix` lists
// the points holding ordinary teleportation keys (innermost last, and only the
// innermost may be undone next), `port_prefix` lists the points holding
// port-teleportation keys (order free, since the corrections commute up to a
// relabeling that the prefix itself records). A channel may act on a system
// only once its suffix is empty; the shared prefix survives channel
// application and is stripped at the far end.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "causalc/common.hpp"
#include "causalc/quantum.hpp"

namespace causalc {

// Causal-order callback over point ids. Expected to be reflexive.
using PrecedesFn =
    std::function<bool(const std::string&, const std::string&)>;

struct AnnotatedSystem {
  std::string id;
  // Quantum content, leg by leg.
  std::vector<SystemLabel> base;
  // Points holding port-teleportation keys, in acquisition order.
  std::vector<std::string> port_prefix;
  // Points holding ordinary teleportation keys; back() is the innermost.
  std::vector<std::string> normal_suffix;
  // Point the system currently sits at.
  std::string location;
  // Name used when rendering, e.g. "I_1" or "E_{(g_1,g_2)}".
  std::string display;

  int total_qubits() const;
};

enum class KeyKind { Normal, Port };

// Ordinary teleportation of `a` from its current location. The key stays at
// the departure point, so it lands on the suffix. No causal check: the
// entanglement used was prearranged.
void ann_normal_teleport(AnnotatedSystem& a, const std::string& from,
                         const std::string& to);

// Port-based teleportation; the port index measured at `from` joins the
// prefix.
void ann_port_teleport(AnnotatedSystem& a, const std::string& from,
                       const std::string& to);

// Undo one key. Normal keys must come off innermost-first and the key must
// have had time to arrive; port keys may come off in any order.
void ann_decrypt(AnnotatedSystem& a, const std::string& key_point,
                 KeyKind kind, const PrecedesFn& precedes);

// Physically move `a` (no encryption involved); needs a causal route.
void ann_send_plain(AnnotatedSystem& a, const std::string& from,
                    const std::string& to, const PrecedesFn& precedes);

// Apply `channel` jointly to `operands` (plus `resident` legs already pinned
// at `point`, e.g. a prearranged ancilla). All operands must sit at `point`
// with empty suffixes and identical prefixes; their legs, followed by the
// resident legs, must match the channel's input legs width for width (ids
// may differ: pass-through wiring hands parcels on under their original leg
// names). The result inherits the shared prefix.
AnnotatedSystem ann_apply_channel(const std::vector<AnnotatedSystem>& operands,
                                  const std::vector<SystemLabel>& resident,
                                  const QuantumChannel& channel,
                                  const std::string& point,
                                  const std::string& result_id,
                                  const std::string& result_display);

// Fuse two co-located systems with matching suffixes. Port-encrypted systems
// cannot be fused: their prefixes relabel legs independently.
AnnotatedSystem ann_merge(const AnnotatedSystem& a, const AnnotatedSystem& b,
                          const std::string& result_id);

struct SplitPart {
  std::string id;
  int legs = 1;
  std::string display;
};

// Cut `a` into consecutive pieces; every piece inherits location and prefix.
// Cutting under normal encryption is rejected (the key bookkeeping would
// leave the calculus), so pieces carry empty suffixes. The leg counts must
// sum to the number of legs of `a`.
std::vector<AnnotatedSystem> ann_split(const AnnotatedSystem& a,
                                       const std::vector<SplitPart>& parts);

// "I_1^{(c_1)}": display plus the suffix superscript when present.
std::string render_part(const AnnotatedSystem& a);

// "^{(c_2,c_3)}(I_1I_2)": concatenated parts, wrapped and tagged with the
// shared prefix only when the prefix is nonempty.
std::string render_group(const std::vector<std::string>& prefix,
                         const std::vector<std::string>& parts);

}  // namespace causalc
