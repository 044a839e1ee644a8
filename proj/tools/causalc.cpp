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

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "causalc/circuit.hpp"
#include "causalc/compiler.hpp"
#include "causalc/examples.hpp"
#include "causalc/executor.hpp"
#include "causalc/json_io.hpp"
#include "causalc/pbt.hpp"
#include "causalc/quantum.hpp"
#include "causalc/task.hpp"
#include "causalc/teleport.hpp"

namespace {

using causalc::Json;

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  causalc::require(out.good(), causalc::ErrorCode::ParseError,
                   "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string step_line(const causalc::ScriptStep& st) {
  std::ostringstream os;
  os << causalc::script_step_kind_name(st.kind) << " [";
  for (size_t i = 0; i < st.systems.size(); ++i)
    os << (i ? ", " : "") << st.systems[i];
  os << "]";
  if (!st.from.empty()) os << " " << st.from << " -> " << st.to;
  if (!st.point.empty()) os << " at " << st.point;
  if (!st.result.empty()) os << " => " << st.result;
  if (!st.parts.empty()) {
    os << " into";
    for (size_t i = 0; i < st.parts.size(); ++i)
      os << (i ? ", " : " ") << st.parts[i].first;
  }
  return os.str();
}

void print_resources_human(const causalc::ResourceReport& r) {
  std::cout << "normal teleports:     " << r.normal_teleports << "\n"
            << "port teleports:       " << r.port_teleports << "\n"
            << "max port depth:       " << r.max_port_depth << "\n"
            << "bell pairs (ideal):   " << r.bell_pairs_ideal << "\n"
            << "classical broadcasts: " << r.classical_broadcasts << "\n";
}

// Operational estimate of the finite-port fidelity: teleport half of a
// maximally entangled pair and average the overlap with the ideal pair.
double sampled_port_fidelity(int ports, unsigned long long seed,
                             int samples) {
  using namespace causalc;
  std::mt19937_64 rng(seed);
  SystemLabel ref;
  ref.id = "ref";
  ref.kind = SystemLabel::Kind::Reference;
  ref.qubits = 1;
  SystemLabel pay;
  pay.id = "p";
  pay.kind = SystemLabel::Kind::Transit;
  pay.qubits = 1;
  std::vector<std::string> a_legs, b_legs;
  for (int i = 1; i <= ports; ++i) {
    a_legs.push_back("a" + std::to_string(i));
    b_legs.push_back("b" + std::to_string(i));
  }
  double total = 0.0;
  for (int s = 0; s < samples; ++s) {
    DensityState st =
        tensor(maximally_entangled(ref, pay), bell_pairs(ports));
    auto [after, key] = pbt_finite_send(st, "p", a_legs, b_legs, rng);
    const std::string& chosen = b_legs[static_cast<size_t>(key.index - 1)];
    std::vector<std::string> drop;
    for (const SystemLabel& l : after.legs)
      if (l.id != "ref" && l.id != chosen) drop.push_back(l.id);
    DensityState red = partial_trace(after, drop);
    red = permute_legs(red, {"ref", chosen});
    DensityState phi = maximally_entangled(red.legs[0], red.legs[1]);
    total += (phi.matrix * red.matrix).trace().real();
  }
  return total / samples;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spacetime circuit toolkit: validate, compile, re-seat, and "
               "simulate teleportation protocols"};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  app.add_flag("--human", human, "plain text output instead of JSON");

  std::string in_file, in_file_b, out_file;
  bool want_coarse = false, want_fine = false;
  int max_points = causalc::kDefaultMaxQubits;
  bool want_script = false, want_resources = false, want_trace = false;
  bool want_choi = false;
  unsigned long long seed = 1;
  int ports = 0;
  double tol = causalc::kEquivalenceTol;
  std::string example_name;
  int fid_ports = 2;
  int fid_samples = 200;

  CLI::App* validate = app.add_subcommand(
      "validate", "check a circuit's structural and script invariants");
  validate->add_option("circuit", in_file, "circuit JSON file")->required();

  CLI::App* signature = app.add_subcommand(
      "signature", "causal signatures of a task's point layout");
  signature->add_option("task", in_file, "task JSON file")->required();
  signature->add_flag("--coarse", want_coarse,
                      "pairwise input-to-output precedence (default)");
  signature->add_flag("--fine", want_fine,
                      "joint-region occupancy over point subsets");
  signature->add_option("--max-points", max_points,
                        "refuse --fine beyond this many points");

  CLI::App* compile = app.add_subcommand(
      "compile", "remove every gate point, emitting a scripted circuit");
  compile->add_option("circuit", in_file, "circuit JSON file")->required();
  compile->add_option("-o,--out", out_file, "write the compiled circuit here");
  compile->add_flag("--script", want_script, "include the step list");
  compile->add_flag("--resources", want_resources,
                    "include the teleportation resource counts");
  compile->add_flag("--trace", want_trace,
                    "include the annotated walkthrough lines");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "dense effective channel of a circuit");
  simulate->add_option("circuit", in_file, "circuit JSON file")->required();
  simulate->add_flag("--choi", want_choi, "include the Choi operator");
  simulate->add_option("--seed", seed, "teleportation key seed");
  simulate->add_option("--ports", ports,
                       "simulate port teleportation physically with this "
                       "many ports (0 = idealized)");

  CLI::App* equiv = app.add_subcommand(
      "equiv", "compare two circuits' effective channels");
  equiv->add_option("a", in_file, "first circuit JSON file")->required();
  equiv->add_option("b", in_file_b, "second circuit JSON file")->required();
  equiv->add_option("--tol", tol, "Choi trace-distance tolerance");
  equiv->add_option("--seed", seed, "teleportation key seed");

  CLI::App* transfer_cmd = app.add_subcommand(
      "transfer", "re-seat a gate-free circuit onto a task's points");
  transfer_cmd->add_option("circuit", in_file, "gate-free circuit JSON file")
      ->required();
  transfer_cmd->add_option("task", in_file_b, "task JSON file")->required();
  transfer_cmd->add_option("-o,--out", out_file,
                           "write the re-seated circuit here");

  CLI::App* examples = app.add_subcommand(
      "examples", "bundled tasks and circuits");
  examples->require_subcommand(1);
  CLI::App* ex_list = examples->add_subcommand("list", "name every example");
  CLI::App* ex_emit =
      examples->add_subcommand("emit", "print one example as JSON");
  ex_emit->add_option("name", example_name, "example name")->required();
  ex_emit->add_option("-o,--out", out_file, "write it here");

  CLI::App* pbt = app.add_subcommand(
      "pbt-fidelity", "entanglement fidelity of finite-port teleportation");
  pbt->add_option("--ports", fid_ports, "number of ports")
      ->required()
      ->check(CLI::PositiveNumber);
  pbt->add_option("--seed", seed, "sampling seed");
  pbt->add_option("--samples", fid_samples, "sampled-check trajectories")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) {
      causalc::SpacetimeCircuit c =
          causalc::circuit_from_json(causalc::load_json_file(in_file));
      causalc::ValidationReport rep = causalc::validate(c);
      if (human) {
        if (rep.ok()) {
          std::cout << "valid\n";
        } else {
          for (const causalc::Violation& v : rep.violations)
            std::cout << v.code << ": " << v.detail << "\n";
        }
      } else {
        Json j;
        j["ok"] = rep.ok();
        j["violations"] = Json::array();
        for (const causalc::Violation& v : rep.violations)
          j["violations"].push_back(
              Json{{"code", v.code}, {"detail", v.detail}});
        emit(j, "");
      }
      return rep.ok() ? 0 : 1;
    }

    if (app.got_subcommand(signature)) {
      causalc::Task t =
          causalc::task_from_json(causalc::load_json_file(in_file));
      causalc::check_task(t);
      if (!want_coarse && !want_fine) want_coarse = true;
      Json j;
      j["inputs"] = t.inputs.size();
      j["outputs"] = t.outputs.size();
      if (want_coarse) {
        causalc::CoarseSignature sig = causalc::coarse_signature(t);
        Json rows = Json::array();
        for (int i = 0; i < sig.n; ++i) {
          Json row = Json::array();
          for (int k = 0; k < sig.m; ++k) row.push_back(sig.at(i, k));
          rows.push_back(std::move(row));
        }
        j["coarse"] = std::move(rows);
        if (human) {
          for (int i = 0; i < sig.n; ++i) {
            for (int k = 0; k < sig.m; ++k)
              std::cout << (sig.at(i, k) ? '1' : '0');
            std::cout << "\n";
          }
        }
      }
      if (want_fine) {
        causalc::FineSignature sig = causalc::fine_signature(t, max_points);
        Json entries = Json::array();
        for (int im = 0; im < (1 << sig.n); ++im)
          for (int om = 0; om < (1 << sig.m); ++om) {
            Json e;
            e["input_mask"] = im;
            e["output_mask"] = om;
            e["nonempty"] = sig.at(im, om);
            entries.push_back(std::move(e));
            if (human)
              std::cout << "inputs " << im << " outputs " << om << ": "
                        << (sig.at(im, om) ? "nonempty" : "empty") << "\n";
          }
        j["fine"] = std::move(entries);
      }
      if (!human) emit(j, "");
      return 0;
    }

    if (app.got_subcommand(compile)) {
      causalc::SpacetimeCircuit c =
          causalc::circuit_from_json(causalc::load_json_file(in_file));
      causalc::CompileResult res = causalc::remove_all_gates(c);
      if (!out_file.empty())
        emit(causalc::circuit_to_json(res.circuit), out_file);
      if (human) {
        std::cout << "compiled: " << res.circuit.points.size() << " points, "
                  << res.circuit.edges.size() << " edges, "
                  << (res.circuit.script ? res.circuit.script->steps.size()
                                         : 0)
                  << " steps\n";
        if (want_resources) print_resources_human(res.resources);
        if (want_script && res.circuit.script)
          for (const causalc::ScriptStep& st : res.circuit.script->steps)
            std::cout << step_line(st) << "\n";
        if (want_trace)
          for (const std::string& line : res.trace)
            std::cout << line << "\n";
        if (!out_file.empty()) std::cout << "wrote " << out_file << "\n";
      } else {
        Json j;
        if (out_file.empty())
          j["circuit"] = causalc::circuit_to_json(res.circuit);
        else
          j["written"] = out_file;
        if (want_resources)
          j["resources"] = causalc::resources_to_json(res.resources);
        if (want_script && res.circuit.script)
          j["script"] = causalc::script_to_json(*res.circuit.script);
        if (want_trace) j["trace"] = res.trace;
        emit(j, "");
      }
      return 0;
    }

    if (app.got_subcommand(simulate)) {
      causalc::SpacetimeCircuit c =
          causalc::circuit_from_json(causalc::load_json_file(in_file));
      causalc::SimOptions opts;
      opts.seed = seed;
      opts.physical_ports = ports;
      causalc::SimResult res = causalc::effective_channel(c, opts);
      if (human) {
        std::cout << "channel: " << res.choi.in_dim << " -> "
                  << res.choi.out_dim << ", " << res.channel.kraus.size()
                  << " Kraus operators\n";
      } else {
        Json j;
        j["in_dim"] = res.choi.in_dim;
        j["out_dim"] = res.choi.out_dim;
        j["kraus_count"] = res.channel.kraus.size();
        if (want_choi) j["choi"] = causalc::choi_to_json(res.choi);
        emit(j, "");
      }
      return 0;
    }

    if (app.got_subcommand(equiv)) {
      causalc::SpacetimeCircuit a =
          causalc::circuit_from_json(causalc::load_json_file(in_file));
      causalc::SpacetimeCircuit b =
          causalc::circuit_from_json(causalc::load_json_file(in_file_b));
      causalc::SimOptions opts;
      opts.seed = seed;
      double dist = causalc::choi_distance(causalc::effective_choi(a, opts),
                                           causalc::effective_choi(b, opts));
      bool equal = dist <= tol;
      if (human) {
        std::cout << "distance " << dist << " (tol " << tol
                  << "): " << (equal ? "equal" : "different") << "\n";
      } else {
        Json j;
        j["distance"] = dist;
        j["tol"] = tol;
        j["equal"] = equal;
        emit(j, "");
      }
      return equal ? 0 : 1;
    }

    if (app.got_subcommand(transfer_cmd)) {
      causalc::SpacetimeCircuit c =
          causalc::circuit_from_json(causalc::load_json_file(in_file));
      causalc::Task t =
          causalc::task_from_json(causalc::load_json_file(in_file_b));
      causalc::SpacetimeCircuit moved = causalc::transfer(c, t);
      if (!out_file.empty()) {
        emit(causalc::circuit_to_json(moved), out_file);
        if (human)
          std::cout << "wrote " << out_file << "\n";
        else
          emit(Json{{"written", out_file}}, "");
      } else if (human) {
        std::cout << "re-seated onto " << t.inputs.size() << " inputs, "
                  << t.outputs.size() << " outputs\n";
      } else {
        emit(Json{{"circuit", causalc::circuit_to_json(moved)}}, "");
      }
      return 0;
    }

    if (app.got_subcommand(examples)) {
      if (examples->got_subcommand(ex_list)) {
        if (human) {
          for (const causalc::ExampleEntry& e : causalc::bundled_examples())
            std::cout << e.name << " (" << e.kind << "): " << e.summary
                      << "\n";
        } else {
          Json j = Json::array();
          for (const causalc::ExampleEntry& e : causalc::bundled_examples())
            j.push_back(Json{{"name", e.name},
                             {"kind", e.kind},
                             {"summary", e.summary}});
          emit(j, "");
        }
        return 0;
      }
      std::string kind;
      for (const causalc::ExampleEntry& e : causalc::bundled_examples())
        if (e.name == example_name) kind = e.kind;
      causalc::require(!kind.empty(), causalc::ErrorCode::ResourceMissing,
                       "no bundled example named '" + example_name + "'");
      Json j = kind == "task"
                   ? causalc::task_to_json(causalc::example_task(example_name))
                   : causalc::circuit_to_json(
                         causalc::example_circuit(example_name));
      emit(j, out_file);
      return 0;
    }

    if (app.got_subcommand(pbt)) {
      double fidelity = causalc::pbt_entanglement_fidelity(fid_ports);
      // 2 + 2N qubits must fit under the width cap, and the physical
      // protocol needs at least two ports.
      bool can_sample = fid_ports >= 2 &&
                        2 + 2 * fid_ports <= causalc::max_qubits();
      double estimate = 0.0;
      if (can_sample)
        estimate = sampled_port_fidelity(fid_ports, seed, fid_samples);
      if (human) {
        std::cout << "ports " << fid_ports << ": fidelity " << fidelity
                  << "\n";
        if (can_sample)
          std::cout << "sampled estimate (" << fid_samples
                    << " trajectories, seed " << seed << "): " << estimate
                    << "\n";
        else
          std::cout << "sampled check skipped: needs 2 <= ports and 2 + "
                       "2*ports qubits under the width cap\n";
      } else {
        Json j;
        j["ports"] = fid_ports;
        j["fidelity"] = fidelity;
        if (can_sample) {
          j["sampled"] = Json{{"samples", fid_samples},
                              {"seed", seed},
                              {"estimate", estimate}};
        } else {
          j["sampled"] = nullptr;
          j["note"] = "sampled check skipped: needs 2 <= ports and 2 + "
                      "2*ports qubits under the width cap";
        }
        emit(j, "");
      }
      return 0;
    }
  } catch (const causalc::Error& e) {
    if (human) {
      std::cerr << e.what() << "\n";
    } else {
      Json j;
      j["error"] = causalc::error_code_name(e.code());
      j["message"] = e.what();
      std::cerr << j.dump(2) << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
