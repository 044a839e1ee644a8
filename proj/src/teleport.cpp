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

#include "causalc/teleport.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace causalc {

namespace {

const SystemLabel& leg_of(const DensityState& st, const std::string& id,
                          ErrorCode missing) {
  for (const auto& l : st.legs)
    if (l.id == id) return l;
  fail(missing, "leg '" + id + "' is not present in the state");
}

std::vector<SystemLabel> labels_of(const DensityState& st,
                                   const std::vector<std::string>& ids,
                                   ErrorCode missing) {
  std::vector<SystemLabel> out;
  for (const auto& id : ids) out.push_back(leg_of(st, id, missing));
  return out;
}

int width_of(const std::vector<SystemLabel>& legs) {
  int n = 0;
  for (const auto& l : legs) n += l.qubits;
  return n;
}

// PSD square root via eigendecomposition, clamping tiny negatives.
Matrix sqrt_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

long PauliKey::index() const {
  long w = 0;
  for (const auto& [a, b] : bits) w = w * 4 + a * 2 + b;
  return w;
}

PauliKey PauliKey::from_index(int qubits, long w) {
  PauliKey key;
  key.bits.assign(qubits, {0, 0});
  for (int j = qubits - 1; j >= 0; --j) {
    key.bits[j] = {static_cast<int>((w >> 1) & 1), static_cast<int>(w & 1)};
    w >>= 2;
  }
  return key;
}

PauliKey PauliKey::sample(int qubits, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  PauliKey key;
  for (int j = 0; j < qubits; ++j) {
    const int a = bit(rng);
    const int b = bit(rng);
    key.bits.push_back({a, b});
  }
  return key;
}

Matrix encrypt_word(const PauliKey& key) { return pauli_word(key.bits); }

Matrix decrypt_word(const PauliKey& key) {
  Matrix word = Matrix::Identity(1, 1);
  for (const auto& [a, b] : key.bits) {
    Matrix p = Matrix::Identity(2, 2);
    if (a) p = p * pauli_x();
    if (b) p = pauli_z() * p;
    word = kron(word, p);
  }
  return word;
}

Vector bell_vector(const PauliKey& key) {
  const long d = 1L << key.qubits();
  const Matrix word = encrypt_word(key);
  Vector v = Vector::Zero(d * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) v(i * d + j) = word(j, i) * norm;
  return v;
}

DensityState bell_pairs(int k, const std::string& a_prefix,
                        const std::string& b_prefix) {
  require(k >= 1, ErrorCode::ArityMismatch, "need at least one pair");
  DensityState st = scalar_state();
  for (int i = 1; i <= k; ++i) {
    SystemLabel a{a_prefix + std::to_string(i), SystemLabel::Kind::Ancilla, 1};
    SystemLabel b{b_prefix + std::to_string(i), SystemLabel::Kind::Ancilla, 1};
    st = tensor(st, maximally_entangled(a, b));
  }
  return st;
}

std::pair<DensityState, PauliKey> nt_encrypt(
    const DensityState& st, const std::vector<std::string>& src_legs,
    const std::vector<std::string>& resource_halves, std::mt19937_64& rng) {
  const auto src = labels_of(st, src_legs, ErrorCode::UnknownLeg);
  const auto res = labels_of(st, resource_halves, ErrorCode::ResourceMissing);
  const int k = width_of(src);
  require(width_of(res) == k, ErrorCode::DimensionMismatch,
          "resource width does not match the payload");
  require(k >= 1, ErrorCode::DimensionMismatch, "empty payload");

  const PauliKey key = PauliKey::sample(k, rng);
  QuantumChannel project;
  project.in_legs = src;
  project.in_legs.insert(project.in_legs.end(), res.begin(), res.end());
  project.kraus = {bell_vector(key).adjoint()};
  DensityState out = apply_channel(st, project);
  const double p = out.matrix.trace().real();
  require(p > 1e-300, ErrorCode::DimensionMismatch,
          "measurement outcome has zero probability");
  out.matrix /= p;
  return {std::move(out), key};
}

DensityState nt_encrypt_averaged(const DensityState& st,
                                 const std::vector<std::string>& src_legs,
                                 const std::vector<std::string>& resource_halves,
                                 const SystemLabel& key_register) {
  const auto src = labels_of(st, src_legs, ErrorCode::UnknownLeg);
  const auto res = labels_of(st, resource_halves, ErrorCode::ResourceMissing);
  const int k = width_of(src);
  require(width_of(res) == k, ErrorCode::DimensionMismatch,
          "resource width does not match the payload");
  require(key_register.qubits == 2 * k, ErrorCode::KeyLengthMismatch,
          "key register must hold two bits per teleported qubit");

  const long keys = 1L << (2 * k);
  QuantumChannel measure;
  measure.in_legs = src;
  measure.in_legs.insert(measure.in_legs.end(), res.begin(), res.end());
  measure.out_legs = {key_register};
  for (long w = 0; w < keys; ++w) {
    const Vector beta = bell_vector(PauliKey::from_index(k, w));
    Matrix kw = Matrix::Zero(keys, beta.size());
    kw.row(w) = beta.adjoint();
    measure.kraus.push_back(std::move(kw));
  }
  return apply_channel(st, measure);
}

DensityState nt_decrypt(const DensityState& st,
                        const std::vector<std::string>& legs,
                        const PauliKey& key) {
  const auto labels = labels_of(st, legs, ErrorCode::UnknownLeg);
  require(width_of(labels) == key.qubits(), ErrorCode::KeyLengthMismatch,
          "key length does not match the decrypted width");
  return apply_unitary(st, labels, decrypt_word(key));
}

DensityState nt_decrypt_averaged(const DensityState& st,
                                 const std::vector<std::string>& legs,
                                 const std::string& key_register) {
  const SystemLabel& reg = leg_of(st, key_register, ErrorCode::UnknownLeg);
  const auto labels = labels_of(st, legs, ErrorCode::UnknownLeg);
  const int k = width_of(labels);
  require(reg.qubits == 2 * k, ErrorCode::KeyLengthMismatch,
          "key register width does not match the decrypted legs");

  const long keys = 1L << (2 * k);
  const long d = 1L << k;
  Matrix u = Matrix::Zero(keys * d, keys * d);
  for (long w = 0; w < keys; ++w)
    u.block(w * d, w * d, d, d) = decrypt_word(PauliKey::from_index(k, w));
  std::vector<SystemLabel> targets = {reg};
  targets.insert(targets.end(), labels.begin(), labels.end());
  return partial_trace(apply_unitary(st, targets, u), {key_register});
}

std::pair<DensityState, PortKey> pbt_ideal_send(
    const DensityState& st, const std::vector<std::string>& payload_legs,
    const std::vector<SystemLabel>& receiver_labels) {
  require(payload_legs.size() == receiver_labels.size(),
          ErrorCode::ArityMismatch,
          "one receiver label per payload leg required");
  DensityState out = st;
  for (size_t i = 0; i < payload_legs.size(); ++i) {
    const SystemLabel& cur = leg_of(out, payload_legs[i], ErrorCode::UnknownLeg);
    require(cur.qubits == receiver_labels[i].qubits,
            ErrorCode::DimensionMismatch,
            "receiver label width differs from the payload leg");
    out = relabel_leg(out, payload_legs[i], receiver_labels[i]);
  }
  return {std::move(out), PortKey{1, 0}};
}

std::vector<Matrix> pbt_srm_povm(int ports) {
  require(ports >= 2, ErrorCode::TooFewPorts,
          "port teleportation needs at least two ports");
  require(ports <= 12, ErrorCode::DimensionCap,
          "dense POVM construction is capped at twelve ports");
  const int n = ports + 1;  // payload plus ports
  const long dim = 1L << n;

  // sigma_i: maximally entangled pair on (payload, port i), maximally mixed
  // elsewhere. Qubit 0 is the payload and is the most significant bit.
  auto bit = [n](long x, int q) { return (x >> (n - 1 - q)) & 1L; };
  std::vector<Matrix> sigma(ports);
  const double scale = 1.0 / static_cast<double>(1L << ports);
  for (int i = 1; i <= ports; ++i) {
    Matrix s = Matrix::Zero(dim, dim);
    for (long x = 0; x < dim; ++x) {
      if (bit(x, 0) != bit(x, i)) continue;
      for (long y = 0; y < dim; ++y) {
        if (bit(y, 0) != bit(y, i)) continue;
        // All qubits other than 0 and i must agree between x and y.
        const long mask = ~((1L << (n - 1)) | (1L << (n - 1 - i)));
        if ((x & mask) != (y & mask)) continue;
        s(x, y) = scale;
      }
    }
    sigma[i - 1] = std::move(s);
  }

  Matrix total = Matrix::Zero(dim, dim);
  for (const auto& s : sigma) total += s;
  Eigen::SelfAdjointEigenSolver<Matrix> es(total);
  const double cutoff = 1e-12 * std::max(1.0, es.eigenvalues().maxCoeff());
  Matrix inv_sqrt = Matrix::Zero(dim, dim);
  Matrix support = Matrix::Zero(dim, dim);
  for (long j = 0; j < dim; ++j) {
    const double lambda = es.eigenvalues()(j);
    if (lambda <= cutoff) continue;
    const Vector v = es.eigenvectors().col(j);
    inv_sqrt += (1.0 / std::sqrt(lambda)) * v * v.adjoint();
    support += v * v.adjoint();
  }
  // The missing weight on ker(total) is split evenly; the kernel of the sum
  // annihilates every sigma_i, so this never changes outcome statistics.
  const Matrix gap = (Matrix::Identity(dim, dim) - support) /
                     static_cast<double>(ports);

  std::vector<Matrix> povm(ports);
  for (int i = 0; i < ports; ++i) {
    Matrix p = inv_sqrt * sigma[i] * inv_sqrt + gap;
    povm[i] = (p + p.adjoint()) / 2.0;
  }
  return povm;
}

std::pair<DensityState, PortKey> pbt_finite_send(
    const DensityState& st, const std::string& payload_leg,
    const std::vector<std::string>& a_legs,
    const std::vector<std::string>& b_legs, std::mt19937_64& rng) {
  const int ports = static_cast<int>(a_legs.size());
  require(static_cast<int>(b_legs.size()) == ports, ErrorCode::ArityMismatch,
          "one receiver leg per port required");
  require(ports >= 2, ErrorCode::TooFewPorts,
          "port teleportation needs at least two ports");
  require(leg_of(st, payload_leg, ErrorCode::UnknownLeg).qubits == 1,
          ErrorCode::UnsupportedDimension,
          "finite-port teleportation sends a single qubit");
  for (const auto& id : a_legs)
    require(leg_of(st, id, ErrorCode::ResourceMissing).qubits == 1,
            ErrorCode::UnsupportedDimension, "port legs must be single qubits");
  for (const auto& id : b_legs)
    require(leg_of(st, id, ErrorCode::ResourceMissing).qubits == 1,
            ErrorCode::UnsupportedDimension, "port legs must be single qubits");

  std::vector<std::string> sender_ids = {payload_leg};
  sender_ids.insert(sender_ids.end(), a_legs.begin(), a_legs.end());

  // Outcome distribution from the reduced sender state.
  std::vector<std::string> others;
  for (const auto& l : st.legs)
    if (std::find(sender_ids.begin(), sender_ids.end(), l.id) ==
        sender_ids.end())
      others.push_back(l.id);
  DensityState sender = permute_legs(partial_trace(st, others), sender_ids);

  const auto povm = pbt_srm_povm(ports);
  std::vector<double> prob(ports);
  double total = 0;
  for (int i = 0; i < ports; ++i) {
    prob[i] = std::max(0.0, (povm[i] * sender.matrix).trace().real());
    total += prob[i];
  }
  require(total > 1e-300, ErrorCode::DimensionMismatch,
          "sender state has no outcome weight");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double draw = coin(rng) * total;
  int outcome = ports - 1;
  for (int i = 0; i < ports; ++i) {
    draw -= prob[i];
    if (draw <= 0) {
      outcome = i;
      break;
    }
  }

  QuantumChannel collapse;
  collapse.in_legs = labels_of(st, sender_ids, ErrorCode::UnknownLeg);
  collapse.out_legs = collapse.in_legs;
  collapse.kraus = {sqrt_psd(povm[outcome])};
  DensityState out = apply_channel(st, collapse);
  const double p = out.matrix.trace().real();
  require(p > 1e-300, ErrorCode::DimensionMismatch,
          "measurement outcome has zero probability");
  out.matrix /= p;
  out = partial_trace(out, sender_ids);
  return {std::move(out), PortKey{outcome + 1, ports}};
}

}  // namespace causalc
