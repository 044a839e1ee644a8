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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace causalc::testing {

Matrix kron_ref(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Matrix apply_kraus_ref(const std::vector<Matrix>& kraus, const Matrix& rho) {
  if (kraus.empty()) throw std::invalid_argument("no kraus terms");
  Matrix out = Matrix::Zero(kraus[0].rows(), kraus[0].rows());
  for (const Matrix& k : kraus) out += k * rho * k.adjoint();
  return out;
}

Matrix partial_trace_ref(const Matrix& rho, int total,
                         const std::vector<int>& drop) {
  std::vector<int> keep;
  for (int q = 0; q < total; ++q)
    if (std::find(drop.begin(), drop.end(), q) == drop.end()) keep.push_back(q);
  const long kd = 1L << keep.size();
  const long td = 1L << drop.size();
  auto assemble = [&](long kept_bits, long traced_bits) {
    long idx = 0;
    for (int q = 0; q < total; ++q) {
      idx <<= 1;
      auto it = std::find(keep.begin(), keep.end(), q);
      if (it != keep.end()) {
        long pos = keep.size() - 1 - (it - keep.begin());
        idx |= (kept_bits >> pos) & 1;
      } else {
        auto jt = std::find(drop.begin(), drop.end(), q);
        long pos = drop.size() - 1 - (jt - drop.begin());
        idx |= (traced_bits >> pos) & 1;
      }
    }
    return idx;
  };
  Matrix out = Matrix::Zero(kd, kd);
  for (long i = 0; i < kd; ++i)
    for (long j = 0; j < kd; ++j)
      for (long t = 0; t < td; ++t)
        out(i, j) += rho(assemble(i, t), assemble(j, t));
  return out;
}

Matrix choi_ref(const std::vector<Matrix>& kraus, long in_dim, long out_dim) {
  Matrix c = Matrix::Zero(in_dim * out_dim, in_dim * out_dim);
  for (const Matrix& k : kraus)
    for (long i = 0; i < in_dim; ++i)
      for (long a = 0; a < out_dim; ++a)
        for (long j = 0; j < in_dim; ++j)
          for (long b = 0; b < out_dim; ++b)
            c(i * out_dim + a, j * out_dim + b) +=
                k(a, i) * std::conj(k(b, j));
  return c;
}

namespace {

constexpr double kSlack = 1e-9;

bool feasible(double t, double x, const std::vector<MinkowskiPoint>& future_of,
              const std::vector<MinkowskiPoint>& past_of) {
  for (const auto& p : future_of)
    if (t - p.t < std::abs(x - p.x) - kSlack) return false;
  for (const auto& q : past_of)
    if (q.t - t < std::abs(x - q.x) - kSlack) return false;
  return true;
}

// Margin of the worst constraint; larger is deeper inside the region.
double margin(double t, double x, const std::vector<MinkowskiPoint>& future_of,
              const std::vector<MinkowskiPoint>& past_of) {
  double m = 1e300;
  for (const auto& p : future_of)
    m = std::min(m, (t - p.t) - std::abs(x - p.x));
  for (const auto& q : past_of)
    m = std::min(m, (q.t - t) - std::abs(x - q.x));
  return m;
}

}  // namespace

bool minkowski_region_nonempty_ref(
    const std::vector<MinkowskiPoint>& future_of,
    const std::vector<MinkowskiPoint>& past_of) {
  std::vector<MinkowskiPoint> all = future_of;
  all.insert(all.end(), past_of.begin(), past_of.end());
  if (all.empty()) return true;

  // Every constraint point is itself a candidate, and so is every
  // intersection of two cone boundaries t - p.t = s1 (x - p.x),
  // t - q.t = s2 (x - q.x) with s1 != s2.
  std::vector<MinkowskiPoint> candidates = all;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j)
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          if (s1 == s2) continue;
          // t = s1 x + (p.t - s1 p.x) and t = s2 x + (q.t - s2 q.x).
          double b1 = all[i].t - s1 * all[i].x;
          double b2 = all[j].t - s2 * all[j].x;
          double x = (b2 - b1) / (s1 - s2);
          candidates.push_back(MinkowskiPoint{s1 * x + b1, x});
        }
  for (const auto& c : candidates)
    if (feasible(c.t, c.x, future_of, past_of)) return true;

  // Two-stage grid over the (expanded) bounding box as a safety net.
  double lo_t = 1e300, hi_t = -1e300, lo_x = 1e300, hi_x = -1e300;
  for (const auto& p : all) {
    lo_t = std::min(lo_t, p.t);
    hi_t = std::max(hi_t, p.t);
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
  }
  double span = std::max({hi_t - lo_t, hi_x - lo_x, 1.0});
  lo_t -= span;
  hi_t += span;
  lo_x -= span;
  hi_x += span;
  const int n = 60;
  double best = -1e300, best_t = 0, best_x = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      double t = lo_t + (hi_t - lo_t) * i / n;
      double x = lo_x + (hi_x - lo_x) * j / n;
      double m = margin(t, x, future_of, past_of);
      if (m > best) {
        best = m;
        best_t = t;
        best_x = x;
      }
    }
  double cell = std::max(hi_t - lo_t, hi_x - lo_x) / n;
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      double t = best_t + cell * 2.0 * i / n;
      double x = best_x + cell * 2.0 * j / n;
      if (feasible(t, x, future_of, past_of)) return true;
    }
  return false;
}

bool causal_set_region_nonempty_ref(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& relations,
    const std::vector<std::string>& future_of,
    const std::vector<std::string>& past_of) {
  std::map<std::string, int> index;
  for (const auto& e : elements) index[e] = static_cast<int>(index.size());
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : relations) le[index.at(a)][index.at(b)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (const auto& p : future_of) ok = ok && le[index.at(p)][e];
    for (const auto& q : past_of) ok = ok && le[e][index.at(q)];
    if (ok) return true;
  }
  return false;
}

double pbt_fidelity_dense_ref(int ports) {
  const int n = ports;
  if (n < 1 || n > 8) throw std::invalid_argument("ports out of range");
  // Sender block: payload qubit (most significant) then ports 1..N.
  const long da = 1L << (n + 1);
  auto bit = [](long v, int pos) { return (v >> pos) & 1L; };

  // q[i] projects payload and port i+1 onto the maximally entangled pair,
  // acting as identity elsewhere.
  std::vector<Matrix> q(n);
  for (int i = 0; i < n; ++i) {
    const int pay = n;           // bit position of the payload
    const int prt = n - 1 - i;   // bit position of port i+1
    Matrix m = Matrix::Zero(da, da);
    for (long a = 0; a < da; ++a)
      for (long b = 0; b < da; ++b) {
        if (bit(a, pay) != bit(a, prt) || bit(b, pay) != bit(b, prt)) continue;
        long mask = ~((1L << pay) | (1L << prt));
        if ((a & mask & (da - 1)) != (b & mask & (da - 1))) continue;
        m(a, b) = 0.5;
      }
    q[i] = m;
  }
  Matrix s = Matrix::Zero(da, da);
  for (const Matrix& m : q) s += m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  Matrix inv_sqrt = Matrix::Zero(da, da);
  for (long k = 0; k < da; ++k) {
    double lam = es.eigenvalues()(k);
    if (lam > 1e-12)
      inv_sqrt += es.eigenvectors().col(k) *
                  es.eigenvectors().col(k).adjoint() / std::sqrt(lam);
  }
  std::vector<Matrix> povm(n);
  for (int i = 0; i < n; ++i) povm[i] = inv_sqrt * q[i] * inv_sqrt;

  // Statevector on reference, sender block, then receiver ports 1..N
  // (reference most significant, receiver port N least significant).
  const int total = 2 * n + 2;
  const long dim = 1L << total;
  const long db = 1L << n;
  std::vector<Complex> psi(dim, Complex(0, 0));
  const double amp = std::pow(2.0, -(n + 1) / 2.0);
  for (long a = 0; a < da; ++a) {
    long r = bit(a, n);  // reference copies the payload
    long b = a & (db - 1);  // each receiver port copies its sender port
    psi[(r << (2 * n + 1)) | (a << n) | b] = amp;
  }

  double fid = 0.0;
  std::vector<Complex> chi(dim);
  for (int i = 0; i < n; ++i) {
    // chi = (POVM_i on the sender block) psi.
    for (long r = 0; r < 2; ++r)
      for (long b = 0; b < db; ++b) {
        for (long a = 0; a < da; ++a) {
          Complex acc(0, 0);
          for (long ap = 0; ap < da; ++ap)
            acc += povm[i](a, ap) * psi[(r << (2 * n + 1)) | (ap << n) | b];
          chi[(r << (2 * n + 1)) | (a << n) | b] = acc;
        }
      }
    // Overlap with the maximally entangled pair on (reference, receiver i+1).
    const int rb = n - 1 - i;  // receiver port bit position within b
    Complex f(0, 0);
    for (long a = 0; a < da; ++a)
      for (long b = 0; b < db; ++b) {
        if (b & (1L << rb)) continue;  // visit each spectator pattern once
        long rest = b;
        for (long r = 0; r < 2; ++r) {
          long idx_bra = (r << (2 * n + 1)) | (a << n) | rest | (r << rb);
          for (long rp = 0; rp < 2; ++rp) {
            long idx_ket = (rp << (2 * n + 1)) | (a << n) | rest | (rp << rb);
            f += std::conj(psi[idx_bra]) * 0.5 * chi[idx_ket];
          }
        }
      }
    fid += f.real();
  }
  return fid;
}

double pbt_fidelity_sector_ref(int ports) {
  const int n = ports;
  if (n < 1) throw std::invalid_argument("ports out of range");
  auto binom = [](int m, int k) -> double {
    if (k < 0 || k > m) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
    return r;
  };
  double total = 0.0;
  // twos = 2 s'' runs over the spins reachable by n-1 spin-1/2 systems.
  for (int twos = (n - 1) % 2; twos <= n - 1; twos += 2) {
    double s = twos / 2.0;
    double mult = binom(n - 1, (n - 1 - twos) / 2) -
                  binom(n - 1, (n - 1 - twos) / 2 - 1);
    double mu_plus = n / 4.0 + s / 2.0 + 0.75;
    double mu_minus = n / 4.0 - s / 2.0 + 0.25;
    double inner = (s + 1.0) / (2.0 * s + 1.0) / std::sqrt(mu_plus) +
                   s / (2.0 * s + 1.0) / std::sqrt(mu_minus);
    total += mult * (2.0 * s + 1.0) * inner * inner;
  }
  return n * std::pow(2.0, -(n + 1)) * total;
}

}  // namespace causalc::testing
