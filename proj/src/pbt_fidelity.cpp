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

#include "causalc/pbt.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>

#include "causalc/common.hpp"
#include "causalc/quantum.hpp"

namespace causalc {

namespace {

// Spin matrices for spin s = ts/2, basis |s, m> with m descending from s.
// Returns {Sx, Sy, Sz}.
std::array<Matrix, 3> spin_matrices(int ts) {
  const int dim = ts + 1;
  const double s = ts / 2.0;
  Matrix sz = Matrix::Zero(dim, dim);
  Matrix sp = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) sz(i, i) = s - i;
  for (int i = 1; i < dim; ++i) {
    const double m = s - i;  // raise |s, m> to |s, m+1>
    sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const Matrix sm = sp.adjoint();
  return {(sp + sm) / 2.0, (sp - sm) / Complex(0, 2.0), sz};
}

// Number of spin-(ts/2) irreducible blocks among n qubits.
double spin_multiplicity(int n, int ts) {
  const int k = (n - ts) / 2;
  auto binom = [](int nn, int kk) -> double {
    if (kk < 0 || kk > nn) return 0.0;
    double v = 1.0;
    for (int i = 0; i < kk; ++i) v = v * (nn - i) / (i + 1);
    return v;
  };
  return binom(n, k) - binom(n, k - 1);
}

// Orthonormal columns spanning the joint null space of the given positive
// semidefinite operators.
Matrix joint_kernel(const std::vector<Matrix>& ops) {
  Matrix acc = Matrix::Zero(ops[0].rows(), ops[0].cols());
  for (const auto& op : ops) acc += op.adjoint() * op;
  Eigen::SelfAdjointEigenSolver<Matrix> es((acc + acc.adjoint()) / 2.0);
  const double cutoff = 1e-9 * std::max(1.0, es.eigenvalues().maxCoeff());
  int count = 0;
  while (count < acc.rows() && es.eigenvalues()(count) <= cutoff) ++count;
  return es.eigenvectors().leftCols(count);
}

// tr[(D^+)^(1/2)... ] piece for one block: pinv-sqrt of d, sandwiched.
double block_term(const Matrix& d, const Matrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((d + d.adjoint()) / 2.0);
  const double cutoff = 1e-12 * std::max(1.0, es.eigenvalues().maxCoeff());
  Eigen::VectorXd inv = es.eigenvalues();
  for (long i = 0; i < inv.size(); ++i)
    inv(i) = inv(i) > cutoff ? 1.0 / std::sqrt(inv(i)) : 0.0;
  const Matrix g =
      es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
  return (g * b * g * b).trace().real();
}

}  // namespace

double pbt_entanglement_fidelity(int ports) {
  require(ports >= 1, ErrorCode::TooFewPorts,
          "fidelity needs at least one port");
  const int n = ports;
  const int spectators = n - 1;

  double total = 0.0;
  // Spectator spin s'' = tss/2 over the other n-1 ports.
  for (int tss = spectators % 2; tss <= spectators; tss += 2) {
    const double mult = spin_multiplicity(spectators, tss);
    if (mult <= 0.0) continue;
    const int sdim = tss + 1;
    const long dim = 4L * sdim;

    const auto half = spin_matrices(1);
    const auto rest = spin_matrices(tss);
    const Matrix id2 = Matrix::Identity(2, 2);
    const Matrix ids = Matrix::Identity(sdim, sdim);

    std::array<Matrix, 3> s0, s1, ss;
    for (int a = 0; a < 3; ++a) {
      s0[a] = kron(kron(half[a], id2), ids);
      s1[a] = kron(kron(id2, half[a]), ids);
      ss[a] = kron(kron(id2, id2), rest[a]);
    }

    // The (rescaled) outcome sum: N/4 - S0 . (S1 + Srest).
    Matrix d = (n / 4.0) * Matrix::Identity(dim, dim);
    for (int a = 0; a < 3; ++a) d -= s0[a] * (s1[a] + ss[a]);

    // Singlet projector between payload and the distinguished port.
    Matrix b = 0.25 * Matrix::Identity(dim, dim);
    for (int a = 0; a < 3; ++a) b -= s0[a] * s1[a];

    Matrix jz = s0[2] + s1[2] + ss[2];
    Matrix jsq = Matrix::Zero(dim, dim);
    for (int a = 0; a < 3; ++a) {
      const Matrix ja = s0[a] + s1[a] + ss[a];
      jsq += ja * ja;
    }

    // Possible total spins j = tj/2 from coupling 1/2 x 1/2 x s''.
    for (int tj = std::max(tss - 2, tss % 2); tj <= tss + 2; tj += 2) {
      const double j = tj / 2.0;
      const Matrix eye = Matrix::Identity(dim, dim);
      const Matrix v =
          joint_kernel({jz - j * eye, jsq - j * (j + 1) * eye});
      if (v.cols() == 0) continue;
      const Matrix dv = v.adjoint() * d * v;
      const Matrix bv = v.adjoint() * b * v;
      total += mult * (tj + 1) * block_term(dv, bv);
    }
  }

  const double t = std::ldexp(total, -(n - 1));  // 2^-(N-1) * sum
  return n * t / 4.0;
}

}  // namespace causalc
