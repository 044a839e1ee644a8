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

#include "causalc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace causalc {

namespace {

int g_max_qubits = kDefaultMaxQubits;

std::vector<long> leg_dims(const std::vector<SystemLabel>& legs) {
  std::vector<long> d(legs.size());
  for (size_t i = 0; i < legs.size(); ++i) d[i] = legs[i].dim();
  return d;
}

long dim_product(const std::vector<SystemLabel>& legs) {
  long d = 1;
  for (const auto& l : legs) d *= l.dim();
  return d;
}

int qubit_sum(const std::vector<SystemLabel>& legs) {
  int q = 0;
  for (const auto& l : legs) q += l.qubits;
  return q;
}

void check_width(int qubits, const std::string& what) {
  require(qubits <= max_qubits(), ErrorCode::DimensionCap,
          what + " needs " + std::to_string(qubits) +
              " qubits; the dense cap is " + std::to_string(max_qubits()));
}

void check_unique_ids(const std::vector<SystemLabel>& legs) {
  std::unordered_set<std::string> seen;
  for (const auto& l : legs)
    require(seen.insert(l.id).second, ErrorCode::LegCollision,
            "duplicate leg id '" + l.id + "'");
}

// Index map for reordering legs so that new_legs[k] = legs[perm[k]].
// Entry g of the result is where old global index g lands.
std::vector<long> permutation_map(const std::vector<SystemLabel>& legs,
                                  const std::vector<int>& perm) {
  const size_t n = legs.size();
  const auto old_dims = leg_dims(legs);
  std::vector<long> old_strides(n, 1), new_strides(n, 1);
  for (int i = static_cast<int>(n) - 2; i >= 0; --i)
    old_strides[i] = old_strides[i + 1] * old_dims[i + 1];
  for (int k = static_cast<int>(n) - 2; k >= 0; --k)
    new_strides[k] = new_strides[k + 1] * old_dims[perm[k + 1]];
  const long total = dim_product(legs);
  std::vector<long> map(total);
  for (long g = 0; g < total; ++g) {
    long ng = 0;
    for (size_t k = 0; k < n; ++k) {
      const int src = perm[k];
      const long digit = (g / old_strides[src]) % old_dims[src];
      ng += digit * new_strides[k];
    }
    map[g] = ng;
  }
  return map;
}

DensityState permute_by(const DensityState& st, const std::vector<int>& perm) {
  bool trivial = true;
  for (size_t k = 0; k < perm.size(); ++k)
    if (perm[k] != static_cast<int>(k)) trivial = false;
  if (trivial) return st;
  const auto map = permutation_map(st.legs, perm);
  const long d = st.dim();
  DensityState out;
  out.legs.reserve(perm.size());
  for (int src : perm) out.legs.push_back(st.legs[src]);
  out.matrix = Matrix::Zero(d, d);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) out.matrix(map[r], map[c]) = st.matrix(r, c);
  return out;
}

// Moves the named legs (in the given order) to the front.
DensityState permute_to_front(const DensityState& st,
                              const std::vector<std::string>& front_ids) {
  std::vector<int> perm;
  perm.reserve(st.legs.size());
  std::vector<bool> taken(st.legs.size(), false);
  for (const auto& id : front_ids) {
    const int i = st.leg_index(id);
    require(!taken[i], ErrorCode::LegCollision,
            "leg '" + id + "' named twice");
    taken[i] = true;
    perm.push_back(i);
  }
  for (size_t i = 0; i < st.legs.size(); ++i)
    if (!taken[i]) perm.push_back(static_cast<int>(i));
  return permute_by(st, perm);
}

Matrix hermitize(const Matrix& m) { return (m + m.adjoint()) / 2.0; }

std::normal_distribution<double>& gauss() {
  static thread_local std::normal_distribution<double> dist(0.0, 1.0);
  return dist;
}

Matrix ginibre(long rows, long cols, std::mt19937_64& rng) {
  Matrix g(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) g(i, j) = Complex(gauss()(rng), gauss()(rng));
  return g;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

const char* system_kind_name(SystemLabel::Kind kind) {
  switch (kind) {
    case SystemLabel::Kind::Input: return "input";
    case SystemLabel::Kind::Output: return "output";
    case SystemLabel::Kind::Transit: return "transit";
    case SystemLabel::Kind::Ancilla: return "ancilla";
    case SystemLabel::Kind::Reference: return "reference";
  }
  return "?";
}

int max_qubits() { return g_max_qubits; }

void set_max_qubits(int qubits) {
  require(qubits >= 1, ErrorCode::DimensionCap, "cap must be at least 1 qubit");
  g_max_qubits = qubits;
}

long DensityState::dim() const { return dim_product(legs); }

int DensityState::total_qubits() const { return qubit_sum(legs); }

int DensityState::leg_index(const std::string& id) const {
  for (size_t i = 0; i < legs.size(); ++i)
    if (legs[i].id == id) return static_cast<int>(i);
  fail(ErrorCode::UnknownLeg, "no leg '" + id + "' in state");
}

bool DensityState::has_leg(const std::string& id) const {
  for (const auto& l : legs)
    if (l.id == id) return true;
  return false;
}

DensityState scalar_state() {
  DensityState st;
  st.matrix = Matrix::Ones(1, 1);
  return st;
}

void check_density(const DensityState& st, double tol, bool check_psd) {
  check_unique_ids(st.legs);
  for (const auto& l : st.legs)
    require(l.qubits >= 0, ErrorCode::DimensionMismatch,
            "leg '" + l.id + "' has negative width");
  check_width(st.total_qubits(), "state");
  const long d = st.dim();
  require(st.matrix.rows() == d && st.matrix.cols() == d,
          ErrorCode::DimensionMismatch,
          "state matrix is " + std::to_string(st.matrix.rows()) + "x" +
              std::to_string(st.matrix.cols()) + " but legs give dimension " +
              std::to_string(d));
  require((st.matrix - st.matrix.adjoint()).cwiseAbs().maxCoeff() <= tol,
          ErrorCode::DimensionMismatch, "state matrix is not Hermitian");
  require(std::abs(st.matrix.trace() - Complex(1.0, 0.0)) <= tol,
          ErrorCode::DimensionMismatch, "state matrix trace is not 1");
  if (check_psd) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(st.matrix));
    require(eig.eigenvalues().minCoeff() >= -10.0 * tol,
            ErrorCode::DimensionMismatch,
            "state matrix has a negative eigenvalue");
  }
}

long QuantumChannel::in_dim() const { return dim_product(in_legs); }

long QuantumChannel::out_dim() const { return dim_product(out_legs); }

QuantumChannel identity_channel(std::vector<SystemLabel> legs) {
  QuantumChannel ch;
  ch.in_legs = legs;
  ch.out_legs = std::move(legs);
  ch.kraus = {Matrix::Identity(ch.in_dim(), ch.in_dim())};
  return ch;
}

bool is_identity_channel(const QuantumChannel& ch, double tol) {
  if (ch.in_dim() != ch.out_dim()) return false;
  ChoiMatrix mine = choi(ch);
  ChoiMatrix id = choi(identity_channel(ch.in_legs));
  return choi_distance(mine, id) <= tol;
}

void check_channel(const QuantumChannel& ch, double tol) {
  require(!ch.kraus.empty(), ErrorCode::DimensionMismatch,
          "channel has no Kraus operators");
  const long din = ch.in_dim();
  const long dout = ch.out_dim();
  Matrix sum = Matrix::Zero(din, din);
  for (const auto& k : ch.kraus) {
    require(k.rows() == dout && k.cols() == din, ErrorCode::DimensionMismatch,
            "Kraus operator shape does not match the channel legs");
    sum += k.adjoint() * k;
  }
  require((sum - Matrix::Identity(din, din)).cwiseAbs().maxCoeff() <= tol,
          ErrorCode::DimensionMismatch,
          "channel is not trace preserving (completeness sum differs from "
          "identity)");
}

ChoiMatrix choi(const QuantumChannel& ch) {
  const long din = ch.in_dim();
  const long dout = ch.out_dim();
  ChoiMatrix c;
  c.in_dim = din;
  c.out_dim = dout;
  c.matrix = Matrix::Zero(din * dout, din * dout);
  for (const auto& k : ch.kraus) {
    Vector w(din * dout);
    for (long i = 0; i < din; ++i)
      for (long o = 0; o < dout; ++o) w(i * dout + o) = k(o, i);
    c.matrix += w * w.adjoint();
  }
  return c;
}

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  require(a.in_dim == b.in_dim && a.out_dim == b.out_dim,
          ErrorCode::DimensionMismatch,
          "Choi operators of different channel shapes");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(a.matrix - b.matrix));
  return eig.eigenvalues().cwiseAbs().sum() / static_cast<double>(a.in_dim);
}

bool channels_equal(const QuantumChannel& a, const QuantumChannel& b,
                    double tol) {
  require(a.in_dim() == b.in_dim() && a.out_dim() == b.out_dim(),
          ErrorCode::DimensionMismatch,
          "channels of different shapes cannot be compared");
  return choi_distance(choi(a), choi(b)) <= tol;
}

QuantumChannel kraus_from_choi(const ChoiMatrix& c,
                               std::vector<SystemLabel> in_legs,
                               std::vector<SystemLabel> out_legs,
                               double cutoff) {
  require(dim_product(in_legs) == c.in_dim &&
              dim_product(out_legs) == c.out_dim,
          ErrorCode::DimensionMismatch,
          "legs do not match the Choi operator's dimensions");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(c.matrix));
  const auto& vals = eig.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  QuantumChannel ch;
  ch.in_legs = std::move(in_legs);
  ch.out_legs = std::move(out_legs);
  for (long n = 0; n < vals.size(); ++n) {
    if (vals(n) <= cutoff * scale) continue;
    const double w = std::sqrt(vals(n));
    Matrix k(c.out_dim, c.in_dim);
    for (long i = 0; i < c.in_dim; ++i)
      for (long o = 0; o < c.out_dim; ++o)
        k(o, i) = w * eig.eigenvectors()(i * c.out_dim + o, n);
    ch.kraus.push_back(std::move(k));
  }
  require(!ch.kraus.empty(), ErrorCode::DimensionMismatch,
          "Choi operator has no positive eigenvalues");
  return ch;
}

QuantumChannel channel_tensor_identity(const QuantumChannel& ch,
                                       const std::vector<SystemLabel>& extra) {
  QuantumChannel out;
  out.in_legs = ch.in_legs;
  out.in_legs.insert(out.in_legs.end(), extra.begin(), extra.end());
  out.out_legs = ch.out_legs;
  out.out_legs.insert(out.out_legs.end(), extra.begin(), extra.end());
  check_unique_ids(out.in_legs);
  check_unique_ids(out.out_legs);
  const Matrix eye = Matrix::Identity(dim_product(extra), dim_product(extra));
  for (const auto& k : ch.kraus) out.kraus.push_back(kron(k, eye));
  return out;
}

DensityState tensor(const DensityState& a, const DensityState& b) {
  DensityState out;
  out.legs = a.legs;
  out.legs.insert(out.legs.end(), b.legs.begin(), b.legs.end());
  check_unique_ids(out.legs);
  check_width(out.total_qubits(), "tensor product");
  out.matrix = kron(a.matrix, b.matrix);
  return out;
}

DensityState apply_channel(const DensityState& st, const QuantumChannel& ch) {
  const long din = ch.in_dim();
  const long dout = ch.out_dim();
  for (const auto& k : ch.kraus)
    require(k.rows() == dout && k.cols() == din, ErrorCode::DimensionMismatch,
            "Kraus operator shape does not match the channel legs");
  std::vector<std::string> in_ids;
  in_ids.reserve(ch.in_legs.size());
  for (const auto& l : ch.in_legs) {
    require(st.has_leg(l.id), ErrorCode::LegMismatch,
            "channel input leg '" + l.id + "' is not in the state");
    require(st.legs[st.leg_index(l.id)].dim() == l.dim(),
            ErrorCode::DimensionMismatch,
            "leg '" + l.id + "' has a different width in the state");
    in_ids.push_back(l.id);
  }

  const DensityState p = permute_to_front(st, in_ids);
  const long d_rest = p.dim() / din;
  const long d_new = dout * d_rest;

  std::vector<SystemLabel> rest(p.legs.begin() + ch.in_legs.size(),
                                p.legs.end());
  std::vector<SystemLabel> new_legs = ch.out_legs;
  new_legs.insert(new_legs.end(), rest.begin(), rest.end());
  check_unique_ids(new_legs);
  check_width(qubit_sum(new_legs), "channel application");

  Matrix acc = Matrix::Zero(d_new, d_new);
  Matrix left(d_new, p.dim());
  for (const auto& k : ch.kraus) {
    left.setZero();
    for (long a = 0; a < dout; ++a)
      for (long b = 0; b < din; ++b) {
        if (k(a, b) == Complex(0.0, 0.0)) continue;
        left.block(a * d_rest, 0, d_rest, p.dim()) +=
            k(a, b) * p.matrix.block(b * d_rest, 0, d_rest, p.dim());
      }
    for (long c = 0; c < dout; ++c)
      for (long d = 0; d < din; ++d) {
        if (k(c, d) == Complex(0.0, 0.0)) continue;
        acc.block(0, c * d_rest, d_new, d_rest) +=
            std::conj(k(c, d)) * left.block(0, d * d_rest, d_new, d_rest);
      }
  }

  DensityState out;
  out.legs = std::move(new_legs);
  out.matrix = std::move(acc);
  return out;
}

DensityState partial_trace(const DensityState& st,
                           const std::vector<std::string>& drop_ids) {
  for (const auto& id : drop_ids)
    require(st.has_leg(id), ErrorCode::UnknownLeg,
            "cannot trace out absent leg '" + id + "'");
  if (drop_ids.empty()) return st;
  const DensityState p = permute_to_front(st, drop_ids);
  long d_drop = 1;
  for (size_t i = 0; i < drop_ids.size(); ++i) d_drop *= p.legs[i].dim();
  const long d_rest = p.dim() / d_drop;
  DensityState out;
  out.legs.assign(p.legs.begin() + drop_ids.size(), p.legs.end());
  out.matrix = Matrix::Zero(d_rest, d_rest);
  for (long k = 0; k < d_drop; ++k)
    out.matrix += p.matrix.block(k * d_rest, k * d_rest, d_rest, d_rest);
  return out;
}

DensityState permute_legs(const DensityState& st,
                          const std::vector<std::string>& order) {
  require(order.size() == st.legs.size(), ErrorCode::LegMismatch,
          "leg order must name every leg exactly once");
  return permute_to_front(st, order);
}

DensityState relabel_leg(const DensityState& st, const std::string& from,
                         const SystemLabel& to) {
  const int i = st.leg_index(from);
  require(st.legs[i].dim() == to.dim(), ErrorCode::DimensionMismatch,
          "cannot relabel leg '" + from + "' to a different width");
  DensityState out = st;
  out.legs[i] = to;
  check_unique_ids(out.legs);
  return out;
}

DensityState apply_unitary(const DensityState& st,
                           const std::vector<SystemLabel>& legs,
                           const Matrix& u) {
  QuantumChannel ch;
  ch.in_legs = legs;
  ch.out_legs = legs;
  ch.kraus = {u};
  return apply_channel(st, ch);
}

DensityState basis_state(const SystemLabel& leg, long b) {
  require(b >= 0 && b < leg.dim(), ErrorCode::DimensionMismatch,
          "basis index out of range for leg '" + leg.id + "'");
  DensityState st;
  st.legs = {leg};
  st.matrix = Matrix::Zero(leg.dim(), leg.dim());
  st.matrix(b, b) = 1.0;
  return st;
}

DensityState maximally_mixed(const std::vector<SystemLabel>& legs) {
  DensityState st;
  st.legs = legs;
  check_unique_ids(st.legs);
  check_width(st.total_qubits(), "state");
  const long d = st.dim();
  st.matrix = Matrix::Identity(d, d) / static_cast<double>(d);
  return st;
}

DensityState maximally_entangled(const SystemLabel& a, const SystemLabel& b) {
  require(a.dim() == b.dim(), ErrorCode::DimensionMismatch,
          "entangled pair needs equal leg widths");
  const long d = a.dim();
  Vector phi = Vector::Zero(d * d);
  for (long i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(double(d));
  DensityState st;
  st.legs = {a, b};
  check_unique_ids(st.legs);
  check_width(st.total_qubits(), "entangled pair");
  st.matrix = phi * phi.adjoint();
  return st;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix pauli_word(const std::vector<std::pair<int, int>>& bits) {
  Matrix word = Matrix::Ones(1, 1);
  for (const auto& [a, b] : bits) {
    Matrix p = Matrix::Identity(2, 2);
    if (a) p = pauli_x() * p;
    if (b) p = p * pauli_z();
    word = kron(word, p);
  }
  return word;
}

Matrix random_unitary(long dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(ginibre(dim, dim, rng));
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

QuantumChannel random_channel(std::vector<SystemLabel> in_legs,
                              std::vector<SystemLabel> out_legs,
                              int kraus_count, std::mt19937_64& rng) {
  QuantumChannel ch;
  ch.in_legs = std::move(in_legs);
  ch.out_legs = std::move(out_legs);
  const long din = ch.in_dim();
  const long dout = ch.out_dim();
  require(kraus_count >= 1 && dout * kraus_count >= din,
          ErrorCode::DimensionMismatch,
          "isometric dilation needs out_dim * kraus_count >= in_dim");
  const long m = dout * kraus_count;
  Eigen::HouseholderQR<Matrix> qr(ginibre(m, din, rng));
  Matrix v = qr.householderQ() * Matrix::Identity(m, din);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < din; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) v.col(j) *= d / std::abs(d);
  }
  for (int k = 0; k < kraus_count; ++k)
    ch.kraus.push_back(v.block(k * dout, 0, dout, din));
  return ch;
}

DensityState random_density(std::vector<SystemLabel> legs,
                            std::mt19937_64& rng) {
  DensityState st;
  st.legs = std::move(legs);
  check_unique_ids(st.legs);
  check_width(st.total_qubits(), "state");
  const long d = st.dim();
  const Matrix g = ginibre(d, d, rng);
  st.matrix = g * g.adjoint();
  st.matrix /= st.matrix.trace().real();
  return st;
}

}  // namespace causalc
