// Copyright 2026 The curveinv Authors
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

#ifndef CURVEINV_DIVISOR_HPP_
#define CURVEINV_DIVISOR_HPP_

#include <map>

#include "curveinv/curve.hpp"

namespace curveinv {

enum class PlaceKind { Affine, InfPlus, InfMinus, InfRamified };

/// A degree-1 place of the curve over a fixed splitting extension. Affine
/// places carry coordinates (x0, y0) with y0^2 = f(x0); the infinity kinds
/// have no coordinates. InfPlus is the branch where y/x^{g+1} tends to
/// +sqrt(lead f).
struct Place {
  PlaceKind kind = PlaceKind::Affine;
  FqElt x0 = 0, y0 = 0;

  friend auto operator<=>(const Place&, const Place&) = default;
};

/// Formal Z-combination of places with finite support.
class Divisor {
 public:
  Divisor() = default;

  void add_place(const Place& p, int mult) {
    if (mult == 0) return;
    auto it = mult_.find(p);
    if (it == mult_.end()) {
      mult_.emplace(p, mult);
    } else {
      it->second += mult;
      if (it->second == 0) mult_.erase(it);
    }
  }

  int mult(const Place& p) const {
    auto it = mult_.find(p);
    return it == mult_.end() ? 0 : it->second;
  }

  int degree() const {
    int d = 0;
    for (auto& [p, m] : mult_) d += m;
    return d;
  }

  const std::map<Place, int>& support() const { return mult_; }
  bool operator==(const Divisor&) const = default;

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (auto& [p, m] : b.mult_) a.add_place(p, m);
    return a;
  }
  friend Divisor operator-(Divisor a, const Divisor& b) {
    for (auto& [p, m] : b.mult_) a.add_place(p, -m);
    return a;
  }
  friend Divisor operator*(int n, const Divisor& b) {
    Divisor r;
    for (auto& [p, m] : b.mult_) r.add_place(p, n * m);
    return r;
  }

 private:
  std::map<Place, int> mult_;
};

/// A hyperelliptic curve base-changed to an extension where divisor support
/// lives: the context field always contains a square root of lead(f), so the
/// infinity places are labeled; full splitting of f is needed only for
/// Weierstrass-place enumeration.
class SplitCurve {
 public:
  /// Smallest extension degree with f split and lead(f) square; the context
  /// size is capped by max_q (throws "splitting budget exceeded" beyond it).
  static SplitCurve make(const HyperCurve& c, std::uint32_t max_q = 10000);

  /// Explicit extension degree over the curve's base field.
  static SplitCurve make_with_degree(const HyperCurve& c, std::uint32_t m);

  const HyperCurve& curve() const { return base_; }
  const FieldRef& ctx() const { return ctx_; }
  const Poly& f() const { return f_; }
  int genus() const { return base_.genus; }
  InfinityModel model() const { return base_.infinity; }
  FqElt lead_sqrt() const { return lead_sqrt_; }
  bool fully_split() const { return fully_split_; }

  Place affine(FqElt x0, FqElt y0) const;      // validates y0^2 = f(x0)
  std::vector<Place> places_over_x(FqElt x0) const;
  std::vector<Place> infinity_places() const;

  /// All 2g+2 Weierstrass places; requires fully_split().
  std::vector<Place> weierstrass_places() const;

  Divisor g12() const;        // the fiber over x = infinity
  Divisor canonical() const;  // (g - 1) * g12

 private:
  SplitCurve(HyperCurve c, FieldRef ctx);

  HyperCurve base_;
  FieldRef ctx_;
  Poly f_;
  FqElt lead_sqrt_ = 0;
  bool fully_split_ = false;
};

}  // namespace curveinv

#endif  // CURVEINV_DIVISOR_HPP_
