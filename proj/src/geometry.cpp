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

#include "causalc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace causalc {

std::pair<double, double> lightcone_coords(const MinkowskiPoint& p) {
  return {p.t - p.x, p.t + p.x};
}

bool operator==(const PointValue& a, const PointValue& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == PointValue::Kind::Minkowski) return a.mink == b.mink;
  return a.element == b.element;
}

Spacetime Spacetime::minkowski2d(double epsilon) {
  require(std::isfinite(epsilon) && epsilon >= 0.0, ErrorCode::ParseError,
          "epsilon must be a finite nonnegative real");
  Spacetime s;
  s.backend_ = Backend::Minkowski2D;
  s.epsilon_ = epsilon;
  return s;
}

Spacetime Spacetime::causal_set(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  Spacetime s;
  s.backend_ = Backend::CausalSet;
  s.elements_ = std::move(elements);

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(s.elements_.size()); ++i) {
    auto [it, fresh] = index.emplace(s.elements_[i], i);
    require(fresh, ErrorCode::ParseError,
            "duplicate causal-set element '" + s.elements_[i] + "'");
  }

  const int n = static_cast<int>(s.elements_.size());
  s.reach_.assign(static_cast<size_t>(n) * n, false);
  auto at = [&](int a, int b) -> std::vector<bool>::reference {
    return s.reach_[static_cast<size_t>(a) * n + b];
  };
  for (int i = 0; i < n; ++i) at(i, i) = true;
  for (const auto& [from, to] : relations) {
    auto fi = index.find(from);
    auto ti = index.find(to);
    require(fi != index.end(), ErrorCode::UnknownElement,
            "relation endpoint '" + from + "' is not an element");
    require(ti != index.end(), ErrorCode::UnknownElement,
            "relation endpoint '" + to + "' is not an element");
    at(fi->second, ti->second) = true;
  }

  // Floyd-Warshall closure, then antisymmetry: any two-way pair between
  // distinct elements is a closed causal loop.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!at(i, k)) continue;
      for (int j = 0; j < n; ++j)
        if (at(k, j)) at(i, j) = true;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(!(at(i, j) && at(j, i)), ErrorCode::CycleDetected,
              "causal loop through '" + s.elements_[i] + "' and '" +
                  s.elements_[j] + "'");
  return s;
}

int Spacetime::element_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    if (elements_[i] == id) return i;
  fail(ErrorCode::UnknownElement, "no causal-set element '" + id + "'");
}

bool Spacetime::precedes(const PointValue& p, const PointValue& q) const {
  if (backend_ == Backend::Minkowski2D) {
    require(p.kind == PointValue::Kind::Minkowski &&
                q.kind == PointValue::Kind::Minkowski,
            ErrorCode::BackendMismatch,
            "Minkowski spacetime was queried with a causal-set element");
    const double dt = q.mink.t - p.mink.t;
    const double dx = std::abs(q.mink.x - p.mink.x);
    return dt >= dx - epsilon_;
  }
  require(p.kind == PointValue::Kind::CausalSetElement &&
              q.kind == PointValue::Kind::CausalSetElement,
          ErrorCode::BackendMismatch,
          "causal set was queried with Minkowski coordinates");
  const int a = element_index(p.element);
  const int b = element_index(q.element);
  return reach_[static_cast<size_t>(a) * elements_.size() + b];
}

const std::vector<std::string>& Spacetime::elements() const {
  require(backend_ == Backend::CausalSet, ErrorCode::BackendMismatch,
          "element list requested from a Minkowski spacetime");
  return elements_;
}

bool Spacetime::has_element(const std::string& id) const {
  require(backend_ == Backend::CausalSet, ErrorCode::BackendMismatch,
          "element lookup on a Minkowski spacetime");
  return std::find(elements_.begin(), elements_.end(), id) != elements_.end();
}

std::vector<std::pair<std::string, std::string>> Spacetime::relation_pairs()
    const {
  require(backend_ == Backend::CausalSet, ErrorCode::BackendMismatch,
          "relation pairs requested from a Minkowski spacetime");
  std::vector<std::pair<std::string, std::string>> out;
  const int n = static_cast<int>(elements_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && reach_[static_cast<size_t>(i) * n + j])
        out.emplace_back(elements_[i], elements_[j]);
  return out;
}

namespace {

// Corner of a Minkowski region in null coordinates: the earliest point that
// still lies in every listed future cone (or, absent future constraints, the
// latest point inside every past cone). Returns false if the region is empty.
bool minkowski_corner(const Spacetime& s, const Region& reg, double* u_out,
                      double* v_out) {
  const double eps = s.epsilon();
  double lo_u = -std::numeric_limits<double>::infinity();
  double lo_v = -std::numeric_limits<double>::infinity();
  double hi_u = std::numeric_limits<double>::infinity();
  double hi_v = std::numeric_limits<double>::infinity();
  for (const auto& p : reg.future_of) {
    require(p.kind == PointValue::Kind::Minkowski, ErrorCode::BackendMismatch,
            "region over a Minkowski spacetime names a causal-set element");
    auto [u, v] = lightcone_coords(p.mink);
    lo_u = std::max(lo_u, u - eps);
    lo_v = std::max(lo_v, v - eps);
  }
  for (const auto& p : reg.past_of) {
    require(p.kind == PointValue::Kind::Minkowski, ErrorCode::BackendMismatch,
            "region over a Minkowski spacetime names a causal-set element");
    auto [u, v] = lightcone_coords(p.mink);
    hi_u = std::min(hi_u, u + eps);
    hi_v = std::min(hi_v, v + eps);
  }
  if (lo_u > hi_u || lo_v > hi_v) return false;
  double u = std::isfinite(lo_u) ? lo_u : (std::isfinite(hi_u) ? hi_u : 0.0);
  double v = std::isfinite(lo_v) ? lo_v : (std::isfinite(hi_v) ? hi_v : 0.0);
  *u_out = u;
  *v_out = v;
  return true;
}

}  // namespace

bool region_nonempty(const Spacetime& s, const Region& reg) {
  if (s.backend() == Spacetime::Backend::Minkowski2D) {
    double u, v;
    return minkowski_corner(s, reg, &u, &v);
  }
  for (const auto& e : s.elements()) {
    const PointValue cand = PointValue::causal(e);
    bool ok = true;
    for (const auto& f : reg.future_of)
      if (!s.precedes(f, cand)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const auto& p : reg.past_of)
      if (!s.precedes(cand, p)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::optional<MinkowskiPoint> region_witness(const Spacetime& s,
                                             const Region& reg) {
  if (s.backend() != Spacetime::Backend::Minkowski2D) return std::nullopt;
  double u, v;
  if (!minkowski_corner(s, reg, &u, &v)) return std::nullopt;
  return MinkowskiPoint{(u + v) / 2.0, (v - u) / 2.0};
}

}  // namespace causalc
