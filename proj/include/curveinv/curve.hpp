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

#ifndef CURVEINV_CURVE_HPP_
#define CURVEINV_CURVE_HPP_

#include "curveinv/poly.hpp"

namespace curveinv {

/// Places over x = infinity: one ramified place for odd-degree models, a
/// split pair for even-degree models (labeled by the sign of y/x^{g+1}).
enum class InfinityModel { OnePlace, TwoPlaces };

/// y^2 = f(x) over a field of odd characteristic, f squarefree of degree >= 3.
struct HyperCurve {
  FieldRef F;
  Poly f;
  int genus = 0;
  InfinityModel infinity = InfinityModel::OnePlace;

  bool same_curve(const HyperCurve& o) const {
    return F.get() == o.F.get() && f == o.f;
  }
};

/// Throws "singular model" for non-squarefree f, and rejects characteristic 2
/// and degree < 3.
HyperCurve make_curve(FieldRef F, Poly f);

/// 2x2 matrix acting as x -> (a x + b)/(c x + d); entries in some Fq context.
struct Moebius {
  FqElt a = 1, b = 0, c = 0, d = 1;
  bool operator==(const Moebius&) const = default;
};

/// (c x + d)^w * f((a x + b)/(c x + d)) as a polynomial, for w >= deg f.
Poly moebius_weight_transform(const Poly& f, const Moebius& m, int w);

/// If u == r * v for a scalar r != 0, returns r.
std::optional<FqElt> proportionality_ratio(const Poly& u, const Poly& v);

/// True iff there are a Moebius map over F_{p^k} and e in F_{p^k} with
/// e^2 (c x + d)^{2g+2} f1((a x + b)/(c x + d)) = f2(x). Covers both odd- and
/// even-degree models through the weight-(2g+2) action. Budget p^k <= 50.
bool iso_test(const HyperCurve& c1, const HyperCurve& c2, std::uint32_t ext_degree);

}  // namespace curveinv

#endif  // CURVEINV_CURVE_HPP_
