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

#include <map>
#include <set>
#include <string>

#include "causalc/annotation.hpp"
#include "doctest.h"

using namespace causalc;

namespace {

SystemLabel leg(const std::string& id, int qubits = 1) {
  SystemLabel l;
  l.id = id;
  l.kind = SystemLabel::Kind::Transit;
  l.qubits = qubits;
  return l;
}

AnnotatedSystem sys(const std::string& id, const std::string& at,
                    const std::string& display, int qubits = 1) {
  AnnotatedSystem a;
  a.id = id;
  a.base = {leg(id, qubits)};
  a.location = at;
  a.display = display;
  return a;
}

// Causal order for a two-station diamond: c_1 and c_2 both reach c_3;
// "far" is reachable from nowhere but itself.
bool diamond(const std::string& a, const std::string& b) {
  if (a == b) return true;
  static const std::set<std::pair<std::string, std::string>> rel = {
      {"c_1", "c_2"}, {"c_1", "c_3"}, {"c_2", "c_3"}};
  return rel.count({a, b}) > 0;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error, none was thrown");
  return ErrorCode::ParseError;  // unreachable
}

}  // namespace

TEST_CASE("teleport hops record their keys") {
  AnnotatedSystem a = sys("s", "c_1", "I_1");
  ann_normal_teleport(a, "c_1", "c_2");
  CHECK(a.location == "c_2");
  CHECK(a.normal_suffix == std::vector<std::string>{"c_1"});
  CHECK(a.port_prefix.empty());
  ann_normal_teleport(a, "c_2", "c_3");
  CHECK(a.normal_suffix == std::vector<std::string>({"c_1", "c_2"}));
  ann_port_teleport(a, "c_3", "c_1");
  CHECK(a.port_prefix == std::vector<std::string>{"c_3"});
  CHECK(a.normal_suffix.size() == 2);  // untouched by the port hop
  CHECK(code_of([&] { ann_normal_teleport(a, "c_2", "c_3"); }) ==
        ErrorCode::LocationMismatch);
}

TEST_CASE("ordinary keys come off innermost first") {
  AnnotatedSystem a = sys("s", "c_1", "I_1");
  ann_normal_teleport(a, "c_1", "c_2");
  ann_normal_teleport(a, "c_2", "c_3");
  // The outer key (from c_1) is blocked while the c_2 key is pending.
  CHECK(code_of([&] {
          ann_decrypt(a, "c_1", KeyKind::Normal, diamond);
        }) == ErrorCode::NotLastNormalKey);
  ann_decrypt(a, "c_2", KeyKind::Normal, diamond);
  ann_decrypt(a, "c_1", KeyKind::Normal, diamond);
  CHECK(a.normal_suffix.empty());
}

TEST_CASE("keys only arrive along causal routes") {
  AnnotatedSystem a = sys("s", "c_3", "I_1");
  a.normal_suffix = {"far"};
  CHECK(code_of([&] {
          ann_decrypt(a, "far", KeyKind::Normal, diamond);
        }) == ErrorCode::NotInCausalFuture);
  AnnotatedSystem b = sys("t", "c_3", "I_2");
  b.port_prefix = {"far"};
  CHECK(code_of([&] {
          ann_decrypt(b, "far", KeyKind::Port, diamond);
        }) == ErrorCode::NotInCausalFuture);
}

TEST_CASE("port keys come off in any order") {
  AnnotatedSystem a = sys("s", "c_3", "I_1");
  a.port_prefix = {"c_1", "c_2"};
  ann_decrypt(a, "c_2", KeyKind::Port, diamond);
  CHECK(a.port_prefix == std::vector<std::string>{"c_1"});
  CHECK(code_of([&] {
          ann_decrypt(a, "c_2", KeyKind::Port, diamond);
        }) == ErrorCode::KeyNotPresent);
  ann_decrypt(a, "c_1", KeyKind::Port, diamond);
  CHECK(a.port_prefix.empty());
}

TEST_CASE("plain sends need a causal route") {
  AnnotatedSystem a = sys("s", "c_1", "I_1");
  ann_send_plain(a, "c_1", "c_3", diamond);
  CHECK(a.location == "c_3");
  CHECK(a.normal_suffix.empty());
  CHECK(code_of([&] { ann_send_plain(a, "c_3", "far", diamond); }) ==
        ErrorCode::NotInCausalFuture);
  CHECK(code_of([&] { ann_send_plain(a, "c_1", "c_2", diamond); }) ==
        ErrorCode::LocationMismatch);
}

TEST_CASE("joint channels consume clean co-located operands") {
  QuantumChannel ch;
  ch.in_legs = {leg("x"), leg("y"), leg("anc")};
  ch.out_legs = {leg("z", 2)};
  ch.kraus = {Matrix::Identity(4, 8)};

  AnnotatedSystem a = sys("s1", "c_2", "I_1");
  AnnotatedSystem b = sys("s2", "c_2", "I_2");
  a.port_prefix = {"c_3"};
  b.port_prefix = {"c_3"};

  SUBCASE("result inherits the shared prefix") {
    AnnotatedSystem out = ann_apply_channel(
        {a, b}, {leg("anc")}, ch, "c_2", "r", "\\Lambda(I_1I_2)");
    CHECK(out.id == "r");
    CHECK(out.location == "c_2");
    CHECK(out.port_prefix == std::vector<std::string>{"c_3"});
    CHECK(out.normal_suffix.empty());
    REQUIRE(out.base.size() == 1);
    CHECK(out.base[0].id == "z");
    CHECK(out.base[0].qubits == 2);
    CHECK(out.display == "\\Lambda(I_1I_2)");
  }
  SUBCASE("legs are matched by width, not id") {
    // Operand legs are named s1/s2, the channel expects x/y: fine.
    CHECK_NOTHROW(ann_apply_channel({a, b}, {leg("anc")}, ch, "c_2", "r", "r"));
    AnnotatedSystem wide = sys("s1", "c_2", "I_1", 2);
    wide.port_prefix = {"c_3"};
    CHECK(code_of([&] {
            ann_apply_channel({wide, b}, {leg("anc")}, ch, "c_2", "r", "r");
          }) == ErrorCode::LegMismatch);
  }
  SUBCASE("pending ordinary keys block the channel") {
    a.normal_suffix = {"c_1"};
    CHECK(code_of([&] {
            ann_apply_channel({a, b}, {leg("anc")}, ch, "c_2", "r", "r");
          }) == ErrorCode::NormalEncryptionPresent);
  }
  SUBCASE("operands must share one port prefix") {
    b.port_prefix = {"c_1"};
    CHECK(code_of([&] {
            ann_apply_channel({a, b}, {leg("anc")}, ch, "c_2", "r", "r");
          }) == ErrorCode::SuffixMismatch);
  }
  SUBCASE("operands must sit at the application point") {
    b.location = "c_1";
    CHECK(code_of([&] {
            ann_apply_channel({a, b}, {leg("anc")}, ch, "c_2", "r", "r");
          }) == ErrorCode::LocationMismatch);
  }
  SUBCASE("leg counts must line up") {
    CHECK(code_of([&] {
            ann_apply_channel({a, b}, {}, ch, "c_2", "r", "r");
          }) == ErrorCode::LegMismatch);
    CHECK(code_of([&] {
            ann_apply_channel({}, {leg("anc")}, ch, "c_2", "r", "r");
          }) == ErrorCode::ArityMismatch);
  }
}

TEST_CASE("fusing systems concatenates content and display") {
  AnnotatedSystem a = sys("s1", "c_2", "I_1");
  AnnotatedSystem b = sys("s2", "c_2", "I_2", 2);
  a.normal_suffix = {"c_1"};
  b.normal_suffix = {"c_1"};
  AnnotatedSystem m = ann_merge(a, b, "m");
  CHECK(m.id == "m");
  CHECK(m.display == "I_1I_2");
  REQUIRE(m.base.size() == 2);
  CHECK(m.base[0].id == "s1");
  CHECK(m.base[1].id == "s2");
  CHECK(m.total_qubits() == 3);
  CHECK(m.normal_suffix == std::vector<std::string>{"c_1"});

  SUBCASE("different key trails cannot fuse") {
    b.normal_suffix = {"c_3"};
    CHECK(code_of([&] { ann_merge(a, b, "m"); }) == ErrorCode::SuffixMismatch);
  }
  SUBCASE("different locations cannot fuse") {
    b.location = "c_3";
    CHECK(code_of([&] { ann_merge(a, b, "m"); }) ==
          ErrorCode::LocationMismatch);
  }
  SUBCASE("port-encrypted systems cannot fuse") {
    a.normal_suffix.clear();
    b.normal_suffix.clear();
    a.port_prefix = {"c_3"};
    b.port_prefix = {"c_3"};
    CHECK(code_of([&] { ann_merge(a, b, "m"); }) ==
          ErrorCode::PortMergeForbidden);
  }
}

TEST_CASE("splitting cuts consecutive legs") {
  AnnotatedSystem a = sys("s", "c_2", "I_1");
  a.base = {leg("x"), leg("y", 2), leg("z")};
  a.port_prefix = {"c_3"};
  auto parts = ann_split(a, {{"p1", 2, "A"}, {"p2", 1, "B"}});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].id == "p1");
  CHECK(parts[0].base.size() == 2);
  CHECK(parts[0].base[1].id == "y");
  CHECK(parts[0].port_prefix == std::vector<std::string>{"c_3"});
  CHECK(parts[0].location == "c_2");
  CHECK(parts[0].display == "A");
  CHECK(parts[1].base.size() == 1);
  CHECK(parts[1].base[0].id == "z");

  SUBCASE("splitting under an ordinary key is rejected") {
    a.normal_suffix = {"c_1"};
    CHECK(code_of([&] {
            ann_split(a, {{"p1", 2, "A"}, {"p2", 1, "B"}});
          }) == ErrorCode::NormalEncryptionPresent);
  }
  SUBCASE("pieces must cover the system") {
    CHECK(code_of([&] { ann_split(a, {{"p1", 2, "A"}}); }) ==
          ErrorCode::LegMismatch);
    CHECK(code_of([&] {
            ann_split(a, {{"p1", 0, "A"}, {"p2", 3, "B"}});
          }) == ErrorCode::ArityMismatch);
  }
}

TEST_CASE("rendering, frozen") {
  AnnotatedSystem a = sys("s", "c_2", "I_1");
  CHECK(render_part(a) == "I_1");
  a.normal_suffix = {"c_1"};
  CHECK(render_part(a) == "I_1^{(c_1)}");
  a.normal_suffix = {"c_4", "c_3"};
  CHECK(render_part(a) == "I_1^{(c_4,c_3)}");
  // Port keys never show on a bare part; they tag the group.
  a.normal_suffix.clear();
  a.port_prefix = {"c_2"};
  CHECK(render_part(a) == "I_1");
  CHECK(render_group({}, {"I_1^{(c_1)}", "I_2"}) == "I_1^{(c_1)}I_2");
  CHECK(render_group({"c_2", "c_3", "c_4"}, {"I_1", "I_2"}) ==
        "^{(c_2,c_3,c_4)}(I_1I_2)");
}

TEST_CASE("a two-station round trip in the calculus") {
  // I_1 hops to c_2, is decrypted, fuses with I_2, goes through the gate
  // channel, and the result is port-teleported back to c_1.
  AnnotatedSystem i1 = sys("i1", "c_1", "I_1");
  AnnotatedSystem i2 = sys("i2", "c_2", "I_2");
  ann_normal_teleport(i1, "c_1", "c_2");
  CHECK(render_group({}, {render_part(i1), render_part(i2)}) ==
        "I_1^{(c_1)}I_2");
  // Fusing before the key is undone is rejected.
  CHECK(code_of([&] { ann_merge(i1, i2, "m"); }) == ErrorCode::SuffixMismatch);
  ann_decrypt(i1, "c_1", KeyKind::Normal, diamond);
  AnnotatedSystem m = ann_merge(i1, i2, "m");
  QuantumChannel ch;
  ch.in_legs = {leg("x"), leg("y")};
  ch.out_legs = {leg("z", 2)};
  ch.kraus = {Matrix::Identity(4, 4)};
  AnnotatedSystem out = ann_apply_channel({m}, {}, ch, "c_2", "r",
                                          "\\Lambda_{g_1}(I_1I_2)");
  ann_port_teleport(out, "c_2", "c_1");
  CHECK(render_group(out.port_prefix, {render_part(out)}) ==
        "^{(c_2)}(\\Lambda_{g_1}(I_1I_2))");
  CHECK(out.location == "c_1");
}
