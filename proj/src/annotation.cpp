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

#include "causalc/annotation.hpp"

#include <algorithm>

namespace causalc {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out;
}

void require_at(const AnnotatedSystem& a, const std::string& where) {
  require(a.location == where, ErrorCode::LocationMismatch,
          "system '" + a.id + "' sits at '" + a.location + "', not at '" +
              where + "'");
}

}  // namespace

int AnnotatedSystem::total_qubits() const {
  int n = 0;
  for (const auto& l : base) n += l.qubits;
  return n;
}

void ann_normal_teleport(AnnotatedSystem& a, const std::string& from,
                         const std::string& to) {
  require_at(a, from);
  a.normal_suffix.push_back(from);
  a.location = to;
}

void ann_port_teleport(AnnotatedSystem& a, const std::string& from,
                       const std::string& to) {
  require_at(a, from);
  a.port_prefix.push_back(from);
  a.location = to;
}

void ann_decrypt(AnnotatedSystem& a, const std::string& key_point,
                 KeyKind kind, const PrecedesFn& precedes) {
  require(precedes(key_point, a.location), ErrorCode::NotInCausalFuture,
          "key from '" + key_point + "' cannot reach system '" + a.id +
              "' at '" + a.location + "'");
  if (kind == KeyKind::Normal) {
    require(!a.normal_suffix.empty() && a.normal_suffix.back() == key_point,
            ErrorCode::NotLastNormalKey,
            "key from '" + key_point + "' is not the innermost key of '" +
                a.id + "'");
    a.normal_suffix.pop_back();
    return;
  }
  auto it = std::find(a.port_prefix.begin(), a.port_prefix.end(), key_point);
  require(it != a.port_prefix.end(), ErrorCode::KeyNotPresent,
          "system '" + a.id + "' holds no port key from '" + key_point + "'");
  a.port_prefix.erase(it);
}

void ann_send_plain(AnnotatedSystem& a, const std::string& from,
                    const std::string& to, const PrecedesFn& precedes) {
  require_at(a, from);
  require(precedes(from, to), ErrorCode::NotInCausalFuture,
          "no causal route from '" + from + "' to '" + to + "' for system '" +
              a.id + "'");
  a.location = to;
}

AnnotatedSystem ann_apply_channel(const std::vector<AnnotatedSystem>& operands,
                                  const std::vector<SystemLabel>& resident,
                                  const QuantumChannel& channel,
                                  const std::string& point,
                                  const std::string& result_id,
                                  const std::string& result_display) {
  require(!operands.empty(), ErrorCode::ArityMismatch,
          "channel application needs at least one operand");
  std::vector<SystemLabel> expect;
  for (const auto& a : operands) {
    require_at(a, point);
    require(a.normal_suffix.empty(), ErrorCode::NormalEncryptionPresent,
            "system '" + a.id + "' still carries a teleportation key");
    require(a.port_prefix == operands.front().port_prefix,
            ErrorCode::SuffixMismatch,
            "operands of a joint channel must share one port prefix");
    expect.insert(expect.end(), a.base.begin(), a.base.end());
  }
  expect.insert(expect.end(), resident.begin(), resident.end());
  require(expect.size() == channel.in_legs.size(), ErrorCode::LegMismatch,
          "channel input legs do not match the operands");
  // Pass-through stages may hand a parcel on under its original leg names,
  // so legs are matched positionally by width, not by id.
  for (size_t i = 0; i < expect.size(); ++i)
    require(expect[i].qubits == channel.in_legs[i].qubits,
            ErrorCode::LegMismatch,
            "channel input leg '" + channel.in_legs[i].id +
                "' and operand leg '" + expect[i].id + "' differ in width");

  AnnotatedSystem out;
  out.id = result_id;
  out.base = channel.out_legs;
  out.port_prefix = operands.front().port_prefix;
  out.location = point;
  out.display = result_display;
  return out;
}

AnnotatedSystem ann_merge(const AnnotatedSystem& a, const AnnotatedSystem& b,
                          const std::string& result_id) {
  require(a.location == b.location, ErrorCode::LocationMismatch,
          "cannot fuse '" + a.id + "' and '" + b.id +
              "': they sit at different points");
  require(a.port_prefix.empty() && b.port_prefix.empty(),
          ErrorCode::PortMergeForbidden,
          "cannot fuse port-encrypted systems");
  require(a.normal_suffix == b.normal_suffix, ErrorCode::SuffixMismatch,
          "cannot fuse '" + a.id + "' and '" + b.id +
              "': their key trails differ");
  AnnotatedSystem out;
  out.id = result_id;
  out.base = a.base;
  out.base.insert(out.base.end(), b.base.begin(), b.base.end());
  out.normal_suffix = a.normal_suffix;
  out.location = a.location;
  out.display = a.display + b.display;
  return out;
}

std::vector<AnnotatedSystem> ann_split(const AnnotatedSystem& a,
                                       const std::vector<SplitPart>& parts) {
  require(a.normal_suffix.empty(), ErrorCode::NormalEncryptionPresent,
          "cannot cut '" + a.id + "' while a teleportation key is pending");
  int total = 0;
  for (const auto& p : parts) {
    require(p.legs >= 1, ErrorCode::ArityMismatch,
            "each piece of a split needs at least one leg");
    total += p.legs;
  }
  require(total == static_cast<int>(a.base.size()), ErrorCode::LegMismatch,
          "split pieces do not cover system '" + a.id + "'");
  std::vector<AnnotatedSystem> out;
  size_t cursor = 0;
  for (const auto& p : parts) {
    AnnotatedSystem piece;
    piece.id = p.id;
    piece.base.assign(a.base.begin() + cursor, a.base.begin() + cursor + p.legs);
    piece.port_prefix = a.port_prefix;
    piece.location = a.location;
    piece.display = p.display;
    out.push_back(std::move(piece));
    cursor += p.legs;
  }
  return out;
}

std::string render_part(const AnnotatedSystem& a) {
  if (a.normal_suffix.empty()) return a.display;
  return a.display + "^{(" + join(a.normal_suffix) + ")}";
}

std::string render_group(const std::vector<std::string>& prefix,
                         const std::vector<std::string>& parts) {
  std::string body;
  for (const auto& p : parts) body += p;
  if (prefix.empty()) return body;
  return "^{(" + join(prefix) + ")}(" + body + ")";
}

}  // namespace causalc
