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

#include "causalc/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace causalc {

namespace {

[[noreturn]] void parse_fail(const std::string& where,
                             const std::string& what) {
  fail(ErrorCode::ParseError, where + ": " + what);
}

const Json& get(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    parse_fail(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string get_string(const Json& j, const char* key, const char* where) {
  const Json& v = get(j, key, where);
  if (!v.is_string())
    parse_fail(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

double get_number(const Json& j, const char* key, const char* where) {
  const Json& v = get(j, key, where);
  if (!v.is_number())
    parse_fail(where, std::string("'") + key + "' must be a number");
  return v.get<double>();
}

long get_integer(const Json& j, const char* key, const char* where) {
  const Json& v = get(j, key, where);
  if (!v.is_number_integer())
    parse_fail(where, std::string("'") + key + "' must be an integer");
  return v.get<long>();
}

std::string opt_string(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return "";
  if (!it->is_string())
    parse_fail("label", std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

SystemLabel::Kind kind_from_name(const std::string& name) {
  if (name == "input") return SystemLabel::Kind::Input;
  if (name == "output") return SystemLabel::Kind::Output;
  if (name == "transit") return SystemLabel::Kind::Transit;
  if (name == "ancilla") return SystemLabel::Kind::Ancilla;
  if (name == "reference") return SystemLabel::Kind::Reference;
  parse_fail("label", "unknown system kind '" + name + "'");
}

CircuitPoint::Role role_from_name(const std::string& name) {
  if (name == "input") return CircuitPoint::Role::Input;
  if (name == "gate") return CircuitPoint::Role::Gate;
  if (name == "output") return CircuitPoint::Role::Output;
  parse_fail("point", "unknown role '" + name + "'");
}

ScriptStep::Kind step_kind_from_name(const std::string& name) {
  using K = ScriptStep::Kind;
  for (K k : {K::NormalTeleport, K::PortTeleport, K::NormalDecrypt,
              K::PortDecrypt, K::ApplyChannel, K::Merge, K::Split,
              K::SendPlain, K::EmitOutput})
    if (name == script_step_kind_name(k)) return k;
  parse_fail("script step", "unknown kind '" + name + "'");
}

Json point_value_to_json(const PointValue& p) {
  Json j;
  if (p.kind == PointValue::Kind::Minkowski) {
    j["kind"] = "minkowski";
    j["t"] = p.mink.t;
    j["x"] = p.mink.x;
  } else {
    j["kind"] = "element";
    j["id"] = p.element;
  }
  return j;
}

PointValue point_value_from_json(const Json& j) {
  std::string kind = get_string(j, "kind", "location");
  if (kind == "minkowski")
    return PointValue::minkowski(get_number(j, "t", "location"),
                                 get_number(j, "x", "location"));
  if (kind == "element")
    return PointValue::causal(get_string(j, "id", "location"));
  parse_fail("location", "unknown kind '" + kind + "'");
}

std::vector<std::string> string_list(const Json& j, const char* where) {
  if (!j.is_array()) parse_fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const Json& v : j) {
    if (!v.is_string()) parse_fail(where, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<SystemLabel> label_list(const Json& j, const char* where) {
  if (!j.is_array()) parse_fail(where, "expected an array of labels");
  std::vector<SystemLabel> out;
  for (const Json& v : j) out.push_back(label_from_json(v));
  return out;
}

Json density_to_json(const DensityState& st) {
  Json j;
  j["legs"] = Json::array();
  for (const SystemLabel& l : st.legs) j["legs"].push_back(label_to_json(l));
  j["matrix"] = matrix_to_json(st.matrix);
  return j;
}

DensityState density_from_json(const Json& j) {
  DensityState st;
  st.legs = label_list(get(j, "legs", "state"), "state legs");
  st.matrix = matrix_from_json(get(j, "matrix", "state"));
  return st;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (long i = 0; i < m.rows(); ++i)
    for (long k = 0; k < m.cols(); ++k)
      data.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  long rows = get_integer(j, "rows", "matrix");
  long cols = get_integer(j, "cols", "matrix");
  if (rows < 0 || cols < 0) parse_fail("matrix", "negative shape");
  const Json& data = get(j, "data", "matrix");
  if (!data.is_array() || static_cast<long>(data.size()) != rows * cols)
    parse_fail("matrix", "data length does not match rows * cols");
  Matrix m(rows, cols);
  long n = 0;
  for (const Json& cell : data) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
        !cell[1].is_number())
      parse_fail("matrix", "each entry must be a [re, im] pair");
    m(n / cols, n % cols) =
        Complex(cell[0].get<double>(), cell[1].get<double>());
    ++n;
  }
  return m;
}

Json spacetime_to_json(const Spacetime& s) {
  Json j;
  if (s.backend() == Spacetime::Backend::Minkowski2D) {
    j["backend"] = "minkowski2d";
    j["epsilon"] = s.epsilon();
  } else {
    j["backend"] = "causal-set";
    j["elements"] = s.elements();
    Json rel = Json::array();
    for (const auto& [a, b] : s.relation_pairs())
      rel.push_back(Json::array({a, b}));
    j["relations"] = std::move(rel);
  }
  return j;
}

Spacetime spacetime_from_json(const Json& j) {
  std::string backend = get_string(j, "backend", "spacetime");
  if (backend == "minkowski2d") {
    double eps = 0.0;
    if (j.contains("epsilon")) eps = get_number(j, "epsilon", "spacetime");
    return Spacetime::minkowski2d(eps);
  }
  if (backend == "causal-set") {
    std::vector<std::string> elements =
        string_list(get(j, "elements", "spacetime"), "spacetime elements");
    const Json& rel = get(j, "relations", "spacetime");
    if (!rel.is_array()) parse_fail("spacetime", "'relations' must be an array");
    std::vector<std::pair<std::string, std::string>> relations;
    for (const Json& r : rel) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() ||
          !r[1].is_string())
        parse_fail("spacetime", "each relation must be a [from, to] pair");
      relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
    return Spacetime::causal_set(std::move(elements), relations);
  }
  parse_fail("spacetime", "unknown backend '" + backend + "'");
}

Json label_to_json(const SystemLabel& l) {
  Json j;
  j["id"] = l.id;
  j["kind"] = system_kind_name(l.kind);
  j["qubits"] = l.qubits;
  if (!l.point.empty()) j["point"] = l.point;
  if (!l.edge_from.empty()) j["edge_from"] = l.edge_from;
  if (!l.edge_to.empty()) j["edge_to"] = l.edge_to;
  return j;
}

SystemLabel label_from_json(const Json& j) {
  SystemLabel l;
  l.id = get_string(j, "id", "label");
  l.kind = kind_from_name(get_string(j, "kind", "label"));
  long q = get_integer(j, "qubits", "label");
  if (q < 0) parse_fail("label", "negative width");
  l.qubits = static_cast<int>(q);
  l.point = opt_string(j, "point");
  l.edge_from = opt_string(j, "edge_from");
  l.edge_to = opt_string(j, "edge_to");
  return l;
}

Json channel_to_json(const QuantumChannel& ch) {
  Json j;
  j["in_legs"] = Json::array();
  for (const SystemLabel& l : ch.in_legs)
    j["in_legs"].push_back(label_to_json(l));
  j["out_legs"] = Json::array();
  for (const SystemLabel& l : ch.out_legs)
    j["out_legs"].push_back(label_to_json(l));
  j["kraus"] = Json::array();
  for (const Matrix& k : ch.kraus) j["kraus"].push_back(matrix_to_json(k));
  return j;
}

QuantumChannel channel_from_json(const Json& j) {
  QuantumChannel ch;
  ch.in_legs = label_list(get(j, "in_legs", "channel"), "channel in_legs");
  ch.out_legs = label_list(get(j, "out_legs", "channel"), "channel out_legs");
  const Json& kraus = get(j, "kraus", "channel");
  if (!kraus.is_array()) parse_fail("channel", "'kraus' must be an array");
  for (const Json& k : kraus) ch.kraus.push_back(matrix_from_json(k));
  return ch;
}

Json script_to_json(const Script& s) {
  Json steps = Json::array();
  for (const ScriptStep& st : s.steps) {
    Json j;
    j["kind"] = script_step_kind_name(st.kind);
    j["systems"] = st.systems;
    if (!st.from.empty()) j["from"] = st.from;
    if (!st.to.empty()) j["to"] = st.to;
    if (!st.point.empty()) j["point"] = st.point;
    if (!st.result.empty()) j["result"] = st.result;
    if (!st.parts.empty()) {
      Json parts = Json::array();
      for (const auto& [id, legs] : st.parts) {
        Json p;
        p["id"] = id;
        p["legs"] = legs;
        parts.push_back(std::move(p));
      }
      j["parts"] = std::move(parts);
    }
    if (st.channel) j["channel"] = channel_to_json(*st.channel);
    steps.push_back(std::move(j));
  }
  Json j;
  j["steps"] = std::move(steps);
  return j;
}

Script script_from_json(const Json& j) {
  Script s;
  const Json& steps = get(j, "steps", "script");
  if (!steps.is_array()) parse_fail("script", "'steps' must be an array");
  for (const Json& stj : steps) {
    ScriptStep st;
    st.kind = step_kind_from_name(get_string(stj, "kind", "script step"));
    st.systems =
        string_list(get(stj, "systems", "script step"), "step systems");
    st.from = opt_string(stj, "from");
    st.to = opt_string(stj, "to");
    st.point = opt_string(stj, "point");
    st.result = opt_string(stj, "result");
    if (stj.contains("parts")) {
      const Json& parts = stj["parts"];
      if (!parts.is_array()) parse_fail("script step", "'parts' must be an array");
      for (const Json& p : parts)
        st.parts.emplace_back(
            get_string(p, "id", "split part"),
            string_list(get(p, "legs", "split part"), "split part legs"));
    }
    if (stj.contains("channel") && !stj["channel"].is_null())
      st.channel = channel_from_json(stj["channel"]);
    s.steps.push_back(std::move(st));
  }
  return s;
}

Json circuit_to_json(const SpacetimeCircuit& c) {
  Json j;
  j["spacetime"] = spacetime_to_json(c.spacetime);
  Json points = Json::array();
  for (const CircuitPoint& p : c.points) {
    Json pj;
    pj["id"] = p.id;
    pj["role"] = point_role_name(p.role);
    pj["at"] = point_value_to_json(p.at);
    points.push_back(std::move(pj));
  }
  j["points"] = std::move(points);
  Json edges = Json::array();
  for (const CircuitEdge& e : c.edges)
    edges.push_back(
        Json{{"from", e.from}, {"to", e.to}, {"system", e.system}});
  j["edges"] = std::move(edges);
  Json systems = Json::array();
  for (const auto& [id, lab] : c.systems) systems.push_back(label_to_json(lab));
  j["systems"] = std::move(systems);
  j["input_system"] = c.input_system;
  j["output_system"] = c.output_system;
  j["ancilla_system"] = c.ancilla_system;
  j["ancilla_state"] = density_to_json(c.ancilla_state);
  Json channels = Json::object();
  for (const auto& [pid, ch] : c.channels)
    channels[pid] = channel_to_json(ch);
  j["channels"] = std::move(channels);
  if (c.script) j["script"] = script_to_json(*c.script);
  return j;
}

SpacetimeCircuit circuit_from_json(const Json& j) {
  SpacetimeCircuit c;
  c.spacetime = spacetime_from_json(get(j, "spacetime", "circuit"));
  const Json& points = get(j, "points", "circuit");
  if (!points.is_array()) parse_fail("circuit", "'points' must be an array");
  for (const Json& pj : points) {
    CircuitPoint p;
    p.id = get_string(pj, "id", "point");
    p.role = role_from_name(get_string(pj, "role", "point"));
    p.at = point_value_from_json(get(pj, "at", "point"));
    c.points.push_back(std::move(p));
  }
  const Json& edges = get(j, "edges", "circuit");
  if (!edges.is_array()) parse_fail("circuit", "'edges' must be an array");
  for (const Json& ej : edges)
    c.edges.push_back(CircuitEdge{get_string(ej, "from", "edge"),
                                  get_string(ej, "to", "edge"),
                                  get_string(ej, "system", "edge")});
  for (const SystemLabel& l :
       label_list(get(j, "systems", "circuit"), "circuit systems")) {
    if (c.systems.count(l.id))
      parse_fail("circuit", "duplicate system '" + l.id + "'");
    c.systems.emplace(l.id, l);
  }
  auto read_binding = [&](const char* key) {
    std::map<std::string, std::string> out;
    const Json& b = get(j, key, "circuit");
    if (!b.is_object())
      parse_fail("circuit", std::string("'") + key + "' must be an object");
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (!it.value().is_string())
        parse_fail("circuit", std::string("'") + key + "' values must be strings");
      out.emplace(it.key(), it.value().get<std::string>());
    }
    return out;
  };
  c.input_system = read_binding("input_system");
  c.output_system = read_binding("output_system");
  const Json& anc = get(j, "ancilla_system", "circuit");
  if (!anc.is_object())
    parse_fail("circuit", "'ancilla_system' must be an object");
  for (auto it = anc.begin(); it != anc.end(); ++it)
    c.ancilla_system.emplace(it.key(),
                             string_list(it.value(), "ancilla_system"));
  c.ancilla_state = density_from_json(get(j, "ancilla_state", "circuit"));
  const Json& channels = get(j, "channels", "circuit");
  if (!channels.is_object())
    parse_fail("circuit", "'channels' must be an object");
  for (auto it = channels.begin(); it != channels.end(); ++it)
    c.channels.emplace(it.key(), channel_from_json(it.value()));
  if (j.contains("script") && !j["script"].is_null())
    c.script = script_from_json(j["script"]);
  return c;
}

Json task_to_json(const Task& t) {
  Json j;
  j["spacetime"] = spacetime_to_json(t.spacetime);
  auto points = [](const std::vector<TaskPoint>& ps) {
    Json a = Json::array();
    for (const TaskPoint& p : ps)
      a.push_back(Json{{"id", p.id}, {"at", point_value_to_json(p.at)}});
    return a;
  };
  j["inputs"] = points(t.inputs);
  j["outputs"] = points(t.outputs);
  Json in_sys = Json::array();
  for (const SystemLabel& l : t.input_systems)
    in_sys.push_back(label_to_json(l));
  j["input_systems"] = std::move(in_sys);
  Json out_sys = Json::array();
  for (const SystemLabel& l : t.output_systems)
    out_sys.push_back(label_to_json(l));
  j["output_systems"] = std::move(out_sys);
  j["reference"] = label_to_json(t.reference);
  j["target"] = channel_to_json(t.target);
  j["tol"] = t.tol;
  if (t.promise) j["promise"] = Json{{"isometry", matrix_to_json(t.promise->isometry)}};
  return j;
}

Task task_from_json(const Json& j) {
  Task t;
  t.spacetime = spacetime_from_json(get(j, "spacetime", "task"));
  auto points = [](const Json& a, const char* where) {
    if (!a.is_array()) parse_fail(where, "expected an array of points");
    std::vector<TaskPoint> out;
    for (const Json& pj : a)
      out.push_back(TaskPoint{get_string(pj, "id", where),
                              point_value_from_json(get(pj, "at", where))});
    return out;
  };
  t.inputs = points(get(j, "inputs", "task"), "task inputs");
  t.outputs = points(get(j, "outputs", "task"), "task outputs");
  t.input_systems =
      label_list(get(j, "input_systems", "task"), "task input_systems");
  t.output_systems =
      label_list(get(j, "output_systems", "task"), "task output_systems");
  t.reference = label_from_json(get(j, "reference", "task"));
  t.target = channel_from_json(get(j, "target", "task"));
  if (j.contains("tol")) t.tol = get_number(j, "tol", "task");
  if (j.contains("promise") && !j["promise"].is_null()) {
    Promise p;
    p.isometry = matrix_from_json(get(j["promise"], "isometry", "promise"));
    t.promise = std::move(p);
  }
  return t;
}

Json choi_to_json(const ChoiMatrix& c) {
  Json j;
  j["in_dim"] = c.in_dim;
  j["out_dim"] = c.out_dim;
  j["matrix"] = matrix_to_json(c.matrix);
  return j;
}

ChoiMatrix choi_from_json(const Json& j) {
  ChoiMatrix c;
  c.in_dim = get_integer(j, "in_dim", "choi");
  c.out_dim = get_integer(j, "out_dim", "choi");
  c.matrix = matrix_from_json(get(j, "matrix", "choi"));
  if (c.in_dim <= 0 || c.out_dim <= 0 ||
      c.matrix.rows() != c.in_dim * c.out_dim)
    parse_fail("choi", "matrix shape does not match in_dim * out_dim");
  return c;
}

Json resources_to_json(const ResourceReport& r) {
  Json j;
  j["normal_teleports"] = r.normal_teleports;
  j["port_teleports"] = r.port_teleports;
  j["max_port_depth"] = r.max_port_depth;
  j["bell_pairs_ideal"] = r.bell_pairs_ideal;
  j["classical_broadcasts"] = r.classical_broadcasts;
  return j;
}

ResourceReport resources_from_json(const Json& j) {
  ResourceReport r;
  r.normal_teleports =
      static_cast<int>(get_integer(j, "normal_teleports", "resources"));
  r.port_teleports =
      static_cast<int>(get_integer(j, "port_teleports", "resources"));
  r.max_port_depth =
      static_cast<int>(get_integer(j, "max_port_depth", "resources"));
  r.bell_pairs_ideal =
      static_cast<int>(get_integer(j, "bell_pairs_ideal", "resources"));
  r.classical_broadcasts =
      static_cast<int>(get_integer(j, "classical_broadcasts", "resources"));
  return r;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

}  // namespace causalc
