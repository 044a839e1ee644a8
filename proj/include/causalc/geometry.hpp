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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causalc/common.hpp"

namespace causalc {

// A point of 1+1 dimensional flat spacetime in natural units (c = 1).
struct MinkowskiPoint {
  double t = 0.0;
  double x = 0.0;
};

inline bool operator==(const MinkowskiPoint& a, const MinkowskiPoint& b) {
  return a.t == b.t && a.x == b.x;
}

// Null coordinates (u, v) = (t - x, t + x). Causal precedence between
// Minkowski points is exactly the componentwise product order on (u, v).
std::pair<double, double> lightcone_coords(const MinkowskiPoint& p);

// A location in some spacetime: either Minkowski coordinates or the id of a
// causal-set element. Which alternative is meaningful depends on the backend
// of the Spacetime the value is used with.
struct PointValue {
  enum class Kind { Minkowski, CausalSetElement };

  Kind kind = Kind::Minkowski;
  MinkowskiPoint mink;
  std::string element;

  static PointValue minkowski(double t, double x) {
    PointValue p;
    p.kind = Kind::Minkowski;
    p.mink = MinkowskiPoint{t, x};
    return p;
  }
  static PointValue causal(std::string id) {
    PointValue p;
    p.kind = Kind::CausalSetElement;
    p.element = std::move(id);
    return p;
  }
};

bool operator==(const PointValue& a, const PointValue& b);
inline bool operator!=(const PointValue& a, const PointValue& b) {
  return !(a == b);
}

// A causal order over points. Two backends: the whole 1+1 Minkowski plane,
// or a finite causal set given by elements and a partial order.
//
// Values are immutable after construction and all queries are pure, so a
// Spacetime may be shared freely across threads.
class Spacetime {
 public:
  enum class Backend { Minkowski2D, CausalSet };

  // The Minkowski backend. `epsilon` is a slack added to the light-cone
  // inequality (dt >= |dx| - epsilon) so callers can opt out of exact
  // on-cone comparisons; the default is exact.
  static Spacetime minkowski2d(double epsilon = 0.0);

  // Builds a causal set from elements and relation pairs (a precedes b).
  // The pairs may be a cover or the full relation; the constructor takes the
  // reflexive-transitive closure and rejects cycles (CycleDetected).
  static Spacetime causal_set(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& relations);

  Backend backend() const { return backend_; }
  double epsilon() const { return epsilon_; }

  // Causal precedence p before-or-equal q. Reflexive by definition: the
  // cones J+/J- include their apex.
  bool precedes(const PointValue& p, const PointValue& q) const;

  // Causal-set accessors (BackendMismatch on Minkowski).
  const std::vector<std::string>& elements() const;
  bool has_element(const std::string& id) const;
  // The strict part of the relation as explicit pairs, in a deterministic
  // order, suitable for serialization.
  std::vector<std::pair<std::string, std::string>> relation_pairs() const;

 private:
  Spacetime() = default;

  int element_index(const std::string& id) const;

  Backend backend_ = Backend::Minkowski2D;
  double epsilon_ = 0.0;
  std::vector<std::string> elements_;
  // Row-major |elements| x |elements| reachability, reflexive closure.
  std::vector<bool> reach_;
};

// The intersection of the causal futures of `future_of` and the causal pasts
// of `past_of`. Empty lists impose no constraint.
struct Region {
  std::vector<PointValue> future_of;
  std::vector<PointValue> past_of;
};

// Decides whether the region contains at least one point of the spacetime.
// Minkowski: exact corner test in null coordinates. Causal set: exhaustive
// scan over elements.
bool region_nonempty(const Spacetime& s, const Region& reg);

// For a nonempty Minkowski region, one point inside it (the earliest corner);
// nullopt if the region is empty or the backend is a causal set.
std::optional<MinkowskiPoint> region_witness(const Spacetime& s,
                                             const Region& reg);

}  // namespace causalc
