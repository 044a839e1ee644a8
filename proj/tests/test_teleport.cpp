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

#include <algorithm>
#include <random>

#include "causalc/pbt.hpp"
#include "causalc/teleport.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace causalc;
using namespace causalc::testing;

namespace {

SystemLabel leg(const std::string& id, int qubits = 1) {
  SystemLabel l;
  l.id = id;
  l.kind = SystemLabel::Kind::Transit;
  l.qubits = qubits;
  return l;
}

// Legs in lexicographic id order, for order-insensitive comparison.
DensityState canon(const DensityState& st) {
  std::vector<std::string> order;
  for (const auto& l : st.legs) order.push_back(l.id);
  std::sort(order.begin(), order.end());
  return permute_legs(st, order);
}

double state_diff(const DensityState& a, const DensityState& b) {
  return (canon(a).matrix - canon(b).matrix).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("pauli keys index round trip") {
  for (long w = 0; w < 16; ++w) {
    PauliKey k = PauliKey::from_index(2, w);
    CHECK(k.qubits() == 2);
    CHECK(k.index() == w);
  }
  PauliKey k = PauliKey::from_index(1, 3);
  CHECK(k.bits[0].first == 1);
  CHECK(k.bits[0].second == 1);
}

TEST_CASE("encrypt and decrypt words invert each other") {
  for (long w = 0; w < 4; ++w) {
    PauliKey k = PauliKey::from_index(1, w);
    Matrix prod = decrypt_word(k) * encrypt_word(k);
    CHECK((prod - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  }
  PauliKey k2 = PauliKey::from_index(2, 9);
  Matrix prod = decrypt_word(k2) * encrypt_word(k2);
  CHECK((prod - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("bell vectors, frozen") {
  // Key (1,1) names the singlet (|01> - |10>)/sqrt(2).
  Vector b = bell_vector(PauliKey::from_index(1, 3));
  CHECK(std::abs(b(0)) < 1e-15);
  CHECK(std::abs(b(1) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(b(2) + Complex(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(b(3)) < 1e-15);
  // The four 1-qubit Bell vectors are orthonormal.
  for (long w = 0; w < 4; ++w)
    for (long v = 0; v < 4; ++v) {
      Complex ip = bell_vector(PauliKey::from_index(1, w))
                       .dot(bell_vector(PauliKey::from_index(1, v)));
      CHECK(std::abs(ip - (w == v ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("bell pair states") {
  DensityState pairs = bell_pairs(2);
  REQUIRE(pairs.legs.size() == 4);
  CHECK(pairs.legs[0].id == "a1");
  CHECK(pairs.legs[1].id == "b1");
  CHECK(pairs.legs[2].id == "a2");
  check_density(pairs, 1e-10, true);
  // Each pair alone is maximally entangled.
  DensityState one = partial_trace(pairs, {"a2", "b2"});
  DensityState phi = maximally_entangled(leg("a1"), leg("b1"));
  CHECK(state_diff(one, phi) < 1e-12);
}

TEST_CASE("sampled teleportation is exact after decryption") {
  std::mt19937_64 rng(42);
  DensityState payload = random_density({leg("p"), leg("s")}, rng);
  for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
    std::mt19937_64 r(seed);
    DensityState full = tensor(payload, bell_pairs(1));
    auto [enc, key] = nt_encrypt(full, {"p"}, {"a1"}, r);
    CHECK(enc.has_leg("b1"));
    CHECK_FALSE(enc.has_leg("p"));
    CHECK_FALSE(enc.has_leg("a1"));
    DensityState dec = nt_decrypt(enc, {"b1"}, key);
    DensityState want = relabel_leg(payload, "p", leg("b1"));
    CHECK(state_diff(dec, want) < 1e-10);
  }
}

TEST_CASE("two qubits teleport in one hop") {
  std::mt19937_64 rng(43);
  DensityState payload = random_density({leg("p"), leg("q")}, rng);
  DensityState full = tensor(payload, bell_pairs(2));
  auto [enc, key] = nt_encrypt(full, {"p", "q"}, {"a1", "a2"}, rng);
  CHECK(key.qubits() == 2);
  DensityState dec = nt_decrypt(enc, {"b1", "b2"}, key);
  DensityState want = relabel_leg(relabel_leg(payload, "p", leg("b1")), "q",
                                  leg("b2"));
  CHECK(state_diff(dec, want) < 1e-10);
}

TEST_CASE("averaged teleportation is deterministic and exact") {
  std::mt19937_64 rng(44);
  DensityState payload = random_density({leg("p"), leg("s")}, rng);
  DensityState full = tensor(payload, bell_pairs(1));
  SystemLabel reg = leg("kr", 2);
  DensityState enc = nt_encrypt_averaged(full, {"p"}, {"a1"}, reg);
  CHECK(enc.has_leg("kr"));
  DensityState dec = nt_decrypt_averaged(enc, {"b1"}, "kr");
  DensityState want = relabel_leg(payload, "p", leg("b1"));
  CHECK(state_diff(dec, want) < 1e-10);
  // Run twice: bit-identical (no sampling anywhere).
  DensityState enc2 = nt_encrypt_averaged(full, {"p"}, {"a1"}, reg);
  CHECK((enc.matrix - enc2.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("undecrypted teleportation is a pauli twirl") {
  // Tracing out the key register averages the four Pauli conjugations,
  // which sends every payload to the maximally mixed state.
  std::mt19937_64 rng(45);
  DensityState payload = random_density({leg("p"), leg("s")}, rng);
  DensityState full = tensor(payload, bell_pairs(1));
  DensityState enc = nt_encrypt_averaged(full, {"p"}, {"a1"}, leg("kr", 2));
  DensityState blind = partial_trace(enc, {"kr"});
  DensityState want = tensor(partial_trace(payload, {"p"}),
                             maximally_mixed({leg("b1")}));
  CHECK(state_diff(blind, want) < 1e-10);
}

TEST_CASE("teleport argument errors") {
  std::mt19937_64 rng(46);
  DensityState payload = random_density({leg("p")}, rng);
  DensityState full = tensor(payload, bell_pairs(1));
  CHECK_THROWS_AS(nt_encrypt(full, {"nope"}, {"a1"}, rng), Error);
  try {
    nt_decrypt(full, {"p"}, PauliKey::from_index(2, 0));  // 2 keys, 1 leg
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KeyLengthMismatch);
  }
}

TEST_CASE("ideal port teleportation relocates labels only") {
  std::mt19937_64 rng(47);
  DensityState st = random_density({leg("p"), leg("s")}, rng);
  auto [out, key] = pbt_ideal_send(st, {"p"}, {leg("z")});
  CHECK(key.ideal());
  CHECK(out.has_leg("z"));
  CHECK_FALSE(out.has_leg("p"));
  CHECK(state_diff(out, relabel_leg(st, "p", leg("z"))) == 0.0);
}

TEST_CASE("srm povm resolves the identity") {
  for (int n : {2, 3, 4}) {
    std::vector<Matrix> povm = pbt_srm_povm(n);
    REQUIRE(static_cast<int>(povm.size()) == n);
    const long d = 1L << (n + 1);
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& m : povm) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(m);
      CHECK(es.eigenvalues().minCoeff() > -1e-10);
      sum += m;
    }
    CHECK((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("finite-port trajectories hit the closed-form fidelity") {
  // With a maximally entangled payload every outcome leaves the same
  // overlap, so a single trajectory reads off F(N) exactly.
  for (int n : {2, 3}) {
    for (unsigned long long seed : {1ULL, 2ULL}) {
      std::mt19937_64 rng(seed);
      std::vector<std::string> al, bl;
      for (int i = 1; i <= n; ++i) {
        al.push_back("pa" + std::to_string(i));
        bl.push_back("pb" + std::to_string(i));
      }
      DensityState st = tensor(maximally_entangled(leg("ref"), leg("pay")),
                               bell_pairs(n, "pa", "pb"));
      auto [out, key] = pbt_finite_send(st, "pay", al, bl, rng);
      CHECK_FALSE(key.ideal());
      REQUIRE(key.index >= 1);
      REQUIRE(key.index <= n);
      std::string chosen = bl[key.index - 1];
      std::vector<std::string> rest;
      for (const auto& b : bl)
        if (b != chosen) rest.push_back(b);
      DensityState red = permute_legs(partial_trace(out, rest),
                                      {"ref", chosen});
      DensityState phi = maximally_entangled(leg("ref"), leg(chosen));
      double overlap = (phi.matrix * red.matrix).trace().real();
      CHECK(overlap == doctest::Approx(pbt_entanglement_fidelity(n)).epsilon(1e-9));
    }
  }
}

TEST_CASE("finite-port teleportation needs two ports") {
  std::mt19937_64 rng(48);
  DensityState st = tensor(maximally_entangled(leg("ref"), leg("pay")),
                           bell_pairs(1, "pa", "pb"));
  try {
    pbt_finite_send(st, "pay", {"pa1"}, {"pb1"}, rng);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewPorts);
  }
}
