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

// Acceptance gate: eight end-to-end checks, one per headline property of
// the library, each printed as a single PASS/FAIL line. `--only N` runs a
// single check; the exit status is 0 iff every selected check passed.
// Checks never degrade to weaker statements; a miss is reported as FAIL
// with the measured number.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "causalc/compiler.hpp"
#include "causalc/examples.hpp"
#include "causalc/executor.hpp"
#include "causalc/json_io.hpp"
#include "causalc/pbt.hpp"
#include "causalc/task.hpp"
#include "causalc/teleport.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace {

using namespace causalc;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome bad(std::string detail) { return {false, std::move(detail)}; }

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Largest entrywise deviation between two states on the same leg set,
// after aligning leg order.
double state_gap(const DensityState& a, const DensityState& b) {
  std::vector<std::string> order;
  order.reserve(a.legs.size());
  for (const SystemLabel& l : a.legs) order.push_back(l.id);
  DensityState p = permute_legs(b, order);
  return (a.matrix - p.matrix).cwiseAbs().maxCoeff();
}

SystemLabel wire(const std::string& id) {
  SystemLabel l;
  l.id = id;
  return l;
}

// --- 1. Gate removal preserves the effective channel --------------------
//
// Fifty seeded random standard circuits; each compiled circuit must match
// the original in normalized Choi trace distance, and the whole sweep must
// finish inside a minute.
Outcome compile_soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (unsigned seed = 1; seed <= 50; ++seed) {
    std::mt19937_64 rng(seed);
    SpacetimeCircuit circ = testing::random_circuit(rng);
    ChoiMatrix before = effective_choi(circ);
    CompileResult compiled = remove_all_gates(circ);
    require_valid(compiled.circuit);
    ChoiMatrix after = effective_choi(compiled.circuit);
    double d = choi_distance(before, after);
    worst = std::max(worst, d);
    if (d > 1e-8)
      return bad("seed " + std::to_string(seed) + " Choi distance " + fmt(d) +
                 " > 1e-8");
  }
  double elapsed = seconds_since(t0);
  if (elapsed > 60.0)
    return bad("sweep took " + fmt(elapsed) + "s > 60s budget");
  return ok("50/50 within 1e-8, worst Choi distance " + fmt(worst) + ", " +
            fmt(elapsed) + "s");
}

// --- 2. Compiled circuits move to any same-coarse spacetime -------------
//
// Twenty seeded circuits; for each, the task "realize this circuit's
// channel" is re-seated on a jittered Minkowski layout with the same
// precedence table and on its causal-set skeleton, and the transferred
// compiled circuit must accomplish the task in both realizations.
Outcome same_coarse_transfer() {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed);
    SpacetimeCircuit circ = testing::random_circuit(rng);
    Task original = testing::task_of(circ);
    CompileResult compiled = remove_all_gates(circ);

    std::mt19937_64 jitter(1000 + seed);
    Task minkowski = testing::respace_same_coarse(original, jitter);
    if (!same_coarse(original, minkowski))
      return bad("seed " + std::to_string(seed) +
                 ": jittered layout changed the coarse signature");
    SpacetimeCircuit moved = transfer(compiled.circuit, minkowski);
    if (!accomplishes(moved, minkowski))
      return bad("seed " + std::to_string(seed) +
                 ": transferred circuit misses the Minkowski realization");

    Task causal = causal_set_skeleton(original);
    if (!same_coarse(original, causal))
      return bad("seed " + std::to_string(seed) +
                 ": skeleton changed the coarse signature");
    SpacetimeCircuit moved2 = transfer(compiled.circuit, causal);
    if (!accomplishes(moved2, causal))
      return bad("seed " + std::to_string(seed) +
                 ": transferred circuit misses the causal-set realization");
  }
  return ok("20/20 tasks accomplished on both Minkowski and causal-set "
            "realizations at tol 1e-8");
}

// --- 3. The chained-gates walkthrough, line for line ---------------------
//
// Compiling the bundled gate-removal example must reproduce the checked-in
// annotation trace verbatim and in order.
Outcome golden_trace() {
  CompileResult compiled = remove_all_gates(example_circuit("gate-removal"));
  std::ifstream in(std::string(CAUSALC_SOURCE_DIR) +
                   "/tests/golden/gate_removal_trace.txt");
  if (!in.good()) return bad("golden file missing");
  std::vector<std::string> want;
  for (std::string line; std::getline(in, line);) want.push_back(line);
  if (want.size() != compiled.trace.size())
    return bad("trace has " + std::to_string(compiled.trace.size()) +
               " lines, golden file has " + std::to_string(want.size()));
  for (size_t i = 0; i < want.size(); ++i)
    if (compiled.trace[i] != want[i])
      return bad("line " + std::to_string(i + 1) + " is \"" +
                 compiled.trace[i] + "\", expected \"" + want[i] + "\"");
  const char* landmarks[] = {"I_1^{(c_1)}I_2 at c_2",
                             "^{(c_2)}(\\Lambda_{g_1}(I_1I_2))",
                             "^{(c_2,c_3,c_4)}(S_{in}(r_2)) at c_1"};
  for (const char* mark : landmarks) {
    bool found = false;
    for (const std::string& line : compiled.trace)
      if (line.find(mark) != std::string::npos) found = true;
    if (!found) return bad(std::string("landmark \"") + mark + "\" missing");
  }
  return ok(std::to_string(want.size()) + " lines verbatim, 3 landmarks");
}

// --- 4. Position verification falls to a boundary-only adversary ---------
//
// A two-station task with a seeded random two-qubit target is compiled and
// transferred onto a causal set holding nothing but the four boundary
// points, so no event exists between the stations. The effective channel
// must still match the target, i.e. no task of this shape certifies that
// work happened in the interior.
Outcome pbqc_attack() {
  std::mt19937_64 rng(424242);
  Task t = example_task("pbqc");
  QuantumChannel target =
      random_channel(t.target.in_legs, t.target.out_legs, 3, rng);
  t.target = target;
  check_task(t);

  SpacetimeCircuit naive = example_circuit("pbqc-naive");
  QuantumChannel mid = naive.channels.at("g");
  mid.kraus = target.kraus;  // same 4x4 operators, gate legs
  naive.channels["g"] = mid;
  require_valid(naive);

  CompileResult compiled = remove_all_gates(naive);
  Task boundary = causal_set_skeleton(t);
  SpacetimeCircuit moved = transfer(compiled.circuit, boundary);
  double d = choi_distance(effective_choi(moved), choi(boundary.target));
  if (d > 1e-8) return bad("Choi distance to target " + fmt(d) + " > 1e-8");
  if (!accomplishes(moved, boundary))
    return bad("admissibility check rejected the compiled protocol");
  return ok("interior-free protocol reproduces the target, Choi distance " +
            fmt(d));
}

// --- 5. Teleportation is exact, and useless without the key --------------
//
// For 1..3 qubit payloads entangled with a reference: decrypting with the
// measured key restores the joint state exactly (identity channel on the
// Choi state), while discarding the key leaves the maximally mixed state
// on payload and reference alike (the constant channel).
Outcome teleport_exactness() {
  double worst_exact = 0.0;
  double worst_blind = 0.0;
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::string> payload, resource, receiver;
    DensityState pairs = scalar_state();
    for (int i = 1; i <= k; ++i) {
      std::string n = std::to_string(i);
      payload.push_back("p" + n);
      resource.push_back("a" + n);
      receiver.push_back("b" + n);
      pairs = tensor(pairs, maximally_entangled(wire("p" + n), wire("q" + n)));
    }
    DensityState st = tensor(pairs, bell_pairs(k));

    for (unsigned seed = 1; seed <= 3; ++seed) {
      std::mt19937_64 rng(seed);
      auto [sent, key] = nt_encrypt(st, payload, resource, rng);
      DensityState got = nt_decrypt(sent, receiver, key);
      DensityState want = pairs;
      for (int i = 1; i <= k; ++i)
        want = relabel_leg(want, "p" + std::to_string(i),
                           wire("b" + std::to_string(i)));
      worst_exact = std::max(worst_exact, state_gap(want, got));
    }

    SystemLabel reg = wire("kr");
    reg.qubits = 2 * k;
    DensityState held = nt_encrypt_averaged(st, payload, resource, reg);
    DensityState blind = partial_trace(held, {"kr"});
    worst_blind =
        std::max(worst_blind, state_gap(blind, maximally_mixed(blind.legs)));
  }
  if (worst_exact > 1e-10)
    return bad("decrypted state off by " + fmt(worst_exact) + " > 1e-10");
  if (worst_blind > 1e-10)
    return bad("keyless state off maximally mixed by " + fmt(worst_blind) +
               " > 1e-10");
  return ok("identity to " + fmt(worst_exact) + ", keyless constant to " +
            fmt(worst_blind) + ", payloads 1-3 qubits");
}

// --- 6. Finite ports approach the ideal from below ------------------------
//
// Entanglement fidelities must grow strictly along 2, 4, 8, 16 ports, and
// every value must match the reference computations: the explicitly
// constructed square-root measurement on the full 2N+2 qubit space where
// that fits (N <= 8; at N = 16 the operators would be 2^17-dimensional),
// and the angular-momentum sector sum everywhere.
Outcome port_fidelity_growth() {
  const int ports[] = {2, 4, 8, 16};
  double f[4];
  for (int i = 0; i < 4; ++i) f[i] = pbt_entanglement_fidelity(ports[i]);
  for (int i = 0; i + 1 < 4; ++i)
    if (!(f[i] < f[i + 1]))
      return bad("F(" + std::to_string(ports[i]) + ") = " + fmt(f[i]) +
                 " does not grow to F(" + std::to_string(ports[i + 1]) +
                 ") = " + fmt(f[i + 1]));
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (ports[i] <= 8) {
      double dense = testing::pbt_fidelity_dense_ref(ports[i]);
      worst = std::max(worst, std::abs(f[i] - dense));
    }
    double sector = testing::pbt_fidelity_sector_ref(ports[i]);
    worst = std::max(worst, std::abs(f[i] - sector));
  }
  if (worst > 1e-6)
    return bad("fidelity off the reference by " + fmt(worst) + " > 1e-6");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "F = %.6f < %.6f < %.6f < %.6f, references within %s", f[0],
                f[1], f[2], f[3], fmt(worst).c_str());
  return ok(buf);
}

// --- 7. The causal kernel against independent geometry --------------------
//
// One thousand randomized flat-spacetime queries, precedence against the
// lightcone-coordinate product order and cone-intersection emptiness
// against the grid-plus-corners scan; then twenty generated relation files
// containing directed cycles, each of which the loader must reject.
Outcome causal_kernel() {
  Spacetime flat = Spacetime::minkowski2d();
  std::mt19937_64 rng(20260816);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  // Every fourth query snaps to the integer lattice so exactly-null and
  // exactly-equal separations occur.
  auto draw = [&](bool snap) {
    double c = coord(rng);
    return snap ? std::round(c) : c;
  };

  for (int i = 0; i < 500; ++i) {
    bool snap = (i % 4 == 0);
    double t1 = draw(snap), x1 = draw(snap), t2 = draw(snap), x2 = draw(snap);
    bool lib = flat.precedes(PointValue::minkowski(t1, x1),
                             PointValue::minkowski(t2, x2));
    bool ref = (t1 - x1 <= t2 - x2) && (t1 + x1 <= t2 + x2);
    if (lib != ref)
      return bad("precedence query " + std::to_string(i) + " disagrees at (" +
                 fmt(t1) + "," + fmt(x1) + ") vs (" + fmt(t2) + "," + fmt(x2) +
                 ")");
  }

  for (int i = 0; i < 500; ++i) {
    bool snap = (i % 4 == 0);
    Region reg;
    std::vector<MinkowskiPoint> fut, past;
    int nf = static_cast<int>(rng() % 3), np = static_cast<int>(rng() % 3);
    if (nf + np == 0) nf = 1;
    for (int j = 0; j < nf; ++j) {
      MinkowskiPoint p{draw(snap), draw(snap)};
      fut.push_back(p);
      reg.future_of.push_back(PointValue::minkowski(p.t, p.x));
    }
    for (int j = 0; j < np; ++j) {
      MinkowskiPoint p{draw(snap), draw(snap)};
      past.push_back(p);
      reg.past_of.push_back(PointValue::minkowski(p.t, p.x));
    }
    bool lib = region_nonempty(flat, reg);
    bool ref = testing::minkowski_region_nonempty_ref(fut, past);
    if (lib != ref)
      return bad("region query " + std::to_string(i) + " disagrees");
  }

  namespace fs = std::filesystem;
  for (int i = 1; i <= 20; ++i) {
    std::mt19937_64 gen(9000 + i);
    int n = 4 + static_cast<int>(gen() % 5);
    std::vector<std::string> names;
    for (int j = 0; j < n; ++j) names.push_back("n" + std::to_string(j));
    std::shuffle(names.begin(), names.end(), gen);
    int cycle = 3 + static_cast<int>(gen() % (n - 2));
    std::vector<std::pair<std::string, std::string>> rel;
    for (int j = 0; j < cycle; ++j)
      rel.emplace_back(names[j], names[(j + 1) % cycle]);
    int extra = static_cast<int>(gen() % 3);
    for (int j = 0; j < extra; ++j)
      rel.emplace_back(names[gen() % n], names[gen() % n]);

    std::string text = "{\"backend\":\"causal-set\",\"elements\":[";
    for (int j = 0; j < n; ++j)
      text += (j ? ",\"" : "\"") + names[j] + "\"";
    text += "],\"relations\":[";
    for (size_t j = 0; j < rel.size(); ++j)
      text += std::string(j ? "," : "") + "[\"" + rel[j].first + "\",\"" +
              rel[j].second + "\"]";
    text += "]}";

    fs::path file = fs::temp_directory_path() /
                    ("causalc_cyclic_" + std::to_string(i) + ".json");
    std::ofstream(file) << text;
    bool rejected = false;
    try {
      spacetime_from_json(load_json_file(file.string()));
    } catch (const Error& e) {
      rejected = (e.code() == ErrorCode::CycleDetected);
    }
    fs::remove(file);
    if (!rejected)
      return bad("cyclic relation file " + std::to_string(i) +
                 " was not rejected with CycleDetected");
  }
  return ok("1000/1000 queries agree with both references, 20/20 cyclic "
            "files rejected");
}

// --- 8. Coarse order is all a protocol can see ----------------------------
//
// The bundled two-station task and its interior-free causal-set skeleton
// share the coarse signature but not the fine one, and the one compiled
// circuit accomplishes both after transfer.
Outcome coarse_fine_witness() {
  Task minkowski = example_task("pbqc");
  Task causal = causal_set_skeleton(minkowski);
  if (!same_coarse(minkowski, causal))
    return bad("coarse signatures differ");
  if (same_fine(minkowski, causal))
    return bad("fine signatures agree; the witness needs them apart");
  CompileResult compiled = remove_all_gates(example_circuit("pbqc-naive"));
  SpacetimeCircuit on_mink = transfer(compiled.circuit, minkowski);
  if (!accomplishes(on_mink, minkowski))
    return bad("compiled circuit misses the Minkowski task");
  SpacetimeCircuit on_causal = transfer(compiled.circuit, causal);
  if (!accomplishes(on_causal, causal))
    return bad("compiled circuit misses the causal-set task");
  return ok("same_coarse=true, same_fine=false, one compiled circuit "
            "accomplishes both");
}

struct Entry {
  const char* name;
  Outcome (*fn)();
};

constexpr Entry kCriteria[] = {
    {"compile-soundness", compile_soundness},
    {"same-coarse-transfer", same_coarse_transfer},
    {"golden-trace", golden_trace},
    {"pbqc-attack", pbqc_attack},
    {"teleport-exactness", teleport_exactness},
    {"port-fidelity-growth", port_fidelity_growth},
    {"causal-kernel", causal_kernel},
    {"coarse-fine-witness", coarse_fine_witness},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]  (N in 1..8)\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > 8) {
    std::fprintf(stderr, "no criterion %d; N runs 1..8\n", only);
    return 2;
  }
  bool all = true;
  for (int i = 1; i <= 8; ++i) {
    if (only != 0 && only != i) continue;
    Outcome out;
    try {
      out = kCriteria[i - 1].fn();
    } catch (const std::exception& e) {
      out = bad(std::string("unexpected exception: ") + e.what());
    }
    std::printf("criterion %d %s: %s (%s)\n", i, kCriteria[i - 1].name,
                out.pass ? "PASS" : "FAIL", out.detail.c_str());
    std::fflush(stdout);
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
