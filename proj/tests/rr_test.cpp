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

#include "curveinv/riemann_roch.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace curveinv;

namespace {

// y^2 = x(x-1)(x-2)(x-3)(x-4) over F_7: genus 2, odd model, fully split
SplitCurve quintic_f7() {
  auto F = Fq::make(7);
  Poly f = poly_from_ints(F, {0, 1});
  for (std::uint64_t r = 1; r <= 4; ++r) f = mul(f, poly_from_ints(F, {7 - r, 1}));
  return SplitCurve::make_with_degree(make_curve(F, f), 1);
}

// y^2 = x^7 - x over F_7: genus 3, odd model, all 7 roots rational
SplitCurve septic_f7() {
  auto F = Fq::make(7);
  std::vector<std::uint64_t> c(8, 0);
  c[1] = 6;
  c[7] = 1;
  return SplitCurve::make_with_degree(make_curve(F, poly_from_ints(F, c)), 1);
}

// y^2 = x(x-1)(x-2)(x-3)(x-4)(x-5) over F_7: genus 2, even model, split
SplitCurve sextic_split_f7() {
  auto F = Fq::make(7);
  Poly f = poly_from_ints(F, {0, 1});
  for (std::uint64_t r = 1; r <= 5; ++r) f = mul(f, poly_from_ints(F, {7 - r, 1}));
  return SplitCurve::make_with_degree(make_curve(F, f), 1);
}

Divisor inf_mult(const SplitCurve& X, int m) {
  Divisor d;
  if (X.model() == InfinityModel::OnePlace) {
    d.add_place(Place{PlaceKind::InfRamified, 0, 0}, m);
  } else {
    d.add_place(Place{PlaceKind::InfPlus, 0, 0}, m);
    d.add_place(Place{PlaceKind::InfMinus, 0, 0}, m);
  }
  return d;
}

// random divisor supported on rational places, degree within budget
Divisor random_divisor(const SplitCurve& X, test::Rng& rng, int max_deg) {
  Divisor d;
  const Fq& F = *X.ctx();
  for (int tries = 0; tries < 12; ++tries) {
    int kind = static_cast<int>(rng.next() % 3);
    int mult = static_cast<int>(rng.next() % 5) - 2;
    if (mult == 0) continue;
    if (kind == 0) {
      auto infs = X.infinity_places();
      d.add_place(infs[rng.next() % infs.size()], mult);
    } else {
      FqElt x0 = static_cast<FqElt>(rng.next() % F.q());
      FqElt v = eval(X.f(), x0);
      if (v == 0) {
        d.add_place(Place{PlaceKind::Affine, x0, 0}, mult);
      } else if (F.is_square(v)) {
        auto pl = X.places_over_x(x0);
        d.add_place(pl[rng.next() % 2], mult);
      }
    }
  }
  while (d.degree() > max_deg) d = d - inf_mult(X, 1);
  return d;
}

}  // namespace

TEST_CASE("h0 basics: constants, canon, gap sequence") {
  for (auto X : {quintic_f7(), septic_f7(), sextic_split_f7()}) {
    const int g = X.genus();
    CHECK(rr_dimension(X, Divisor{}) == 1);      // only constants
    CHECK(rr_dimension(X, X.canonical()) == g);  // h0(K) = g
  }

  // Weierstrass gaps at the ramified infinity of the genus-2 quintic:
  // pole orders 0..6 give 1,1,2,2,3,4,5
  SplitCurve X = quintic_f7();
  std::vector<int> expect{1, 1, 2, 2, 3, 4, 5};
  for (int m = 0; m <= 6; ++m) {
    Divisor d;
    d.add_place(Place{PlaceKind::InfRamified, 0, 0}, m);
    CHECK(rr_dimension(X, d) == expect[m]);
  }

  // even model: h0(m * (inf+ + inf-)) = 1, 2, 3 for m = 0, 1, 2
  SplitCurve E = sextic_split_f7();
  for (int m = 0; m <= 2; ++m)
    CHECK(rr_dimension(E, inf_mult(E, m)) == (m == 0 ? 1 : m + 1));
}

TEST_CASE("nonspecial values and the K + g12 example") {
  SplitCurve X = quintic_f7();
  // genus 2: K + g12 has degree 4 = 2g, nonspecial, h0 = 4 - 2 + 1 = 3
  Divisor b = X.canonical() + X.g12();
  CHECK(rr_dimension(X, b) == 3);
  // deg >= 2g - 1 is nonspecial: h0 = deg - g + 1
  for (int m = 3; m <= 8; ++m) {
    Divisor d;
    d.add_place(Place{PlaceKind::InfRamified, 0, 0}, m);
    CHECK(rr_dimension(X, d) == m - X.genus() + 1);
  }
}

TEST_CASE("riemann-roch identity on random divisors") {
  for (auto X : {quintic_f7(), sextic_split_f7(), septic_f7()}) {
    const int g = X.genus();
    Divisor K = X.canonical();
    test::Rng rng(31337 + g);
    for (int it = 0; it < 60; ++it) {
      Divisor D = random_divisor(X, rng, 3 * g + 3);
      int lhs = rr_dimension(X, D) - rr_dimension(X, K - D);
      CHECK(lhs == D.degree() - g + 1);
    }
  }
}

TEST_CASE("linear equivalence") {
  SplitCurve X = quintic_f7();
  // distinct fibers of x are all g12 members: the split fiber over 5
  // (f(5) = 1 is a residue), the ramified fiber over the root 2, and infinity
  Divisor f5;
  for (auto& p : X.places_over_x(5)) f5.add_place(p, 1);
  REQUIRE(f5.degree() == 2);
  Divisor w2;
  w2.add_place(Place{PlaceKind::Affine, 2, 0}, 2);
  CHECK(is_linearly_equivalent(X, f5, w2));
  CHECK(is_linearly_equivalent(X, f5, X.g12()));
  CHECK(is_linearly_equivalent(X, f5, f5));

  // P - Q is not principal on a positive-genus curve
  auto p5 = X.places_over_x(5);
  Divisor P, Q;
  P.add_place(p5[0], 1);
  Q.add_place(p5[1], 1);
  CHECK_FALSE(is_linearly_equivalent(X, P, Q));

  Divisor W;
  W.add_place(Place{PlaceKind::Affine, 0, 0}, 1);
  CHECK_THROWS_WITH_AS(is_linearly_equivalent(X, W, f5), "degree mismatch",
                       std::invalid_argument);
}

TEST_CASE("base points of the three branch-divisor forms, genus 2") {
  SplitCurve X = quintic_f7();
  Divisor K = X.canonical();
  Divisor g12 = X.g12();
  Place P{PlaceKind::Affine, 2, 0};  // a Weierstrass place (2P ~ g12)
  Place Q{PlaceKind::Affine, 3, 0};

  // b = K + g12: base-point-free
  auto rep = base_points(X, K + g12);
  CHECK(rep.h0 == 3);
  CHECK(rep.base_points.empty());

  // b = K + P: exactly one base point
  Divisor b2 = K;
  b2.add_place(P, 1);
  rep = base_points(X, b2);
  CHECK(rep.h0 == 2);
  REQUIRE(rep.base_points.size() == 1);
  CHECK(rep.base_points[0] == P);

  // b = sum of g - 2 copies of g12 (none at genus 2) + P + Q: exactly two
  Divisor b3;
  b3.add_place(P, 1);
  b3.add_place(Q, 1);
  rep = base_points(X, b3);
  CHECK(rep.h0 == 1);
  REQUIRE(rep.base_points.size() == 2);
  CHECK(((rep.base_points[0] == P && rep.base_points[1] == Q) ||
         (rep.base_points[0] == Q && rep.base_points[1] == P)));

  CHECK_THROWS_AS(base_points(X, Divisor{} - X.g12()), std::invalid_argument);
}

TEST_CASE("base points of the three branch-divisor forms, genus 3") {
  SplitCurve X = septic_f7();
  Divisor K = X.canonical();  // 4 * inf
  Divisor g12 = X.g12();
  Place P{PlaceKind::Affine, 1, 0};
  Place Q{PlaceKind::Affine, 4, 0};

  auto rep = base_points(X, K + g12);
  CHECK(rep.h0 == 4);
  CHECK(rep.base_points.empty());

  Divisor b2 = K;
  b2.add_place(P, 1);
  rep = base_points(X, b2);
  CHECK(rep.h0 == 3);
  REQUIRE(rep.base_points.size() == 1);
  CHECK(rep.base_points[0] == P);

  Divisor b3 = g12;
  b3.add_place(P, 1);
  b3.add_place(Q, 1);
  rep = base_points(X, b3);
  CHECK(rep.h0 == 2);
  REQUIRE(rep.base_points.size() == 2);

  // removing a non-base point drops h0 by exactly one
  Divisor probe = b3;
  probe.add_place(Place{PlaceKind::InfRamified, 0, 0}, -1);
  CHECK(rr_dimension(X, probe) == rep.h0 - 1);
}

TEST_CASE("two-torsion classes") {
  // genus 1: y^2 = x^3 - x over F_7, Weierstrass places {0, 1, -1, inf}
  auto F = Fq::make(7);
  SplitCurve E = SplitCurve::make_with_degree(
      make_curve(F, poly_from_ints(F, {0, 6, 0, 1})), 1);
  auto t1 = two_torsion_classes(E);
  CHECK(t1.size() == 4);
  CHECK(t1[0].support().empty());  // the zero class comes first

  SplitCurve X = quintic_f7();
  auto t2 = two_torsion_classes(X);
  CHECK(t2.size() == 16);
  CHECK(t2[0].support().empty());
  for (auto& T : t2) {
    CHECK(T.degree() == 0);
    CHECK(is_linearly_equivalent(X, 2 * T, Divisor{}));
  }
  test::Rng rng(5);
  for (int it = 0; it < 10; ++it) {
    size_t i = rng.next() % t2.size(), j = rng.next() % t2.size();
    if (i == j) continue;
    CHECK_FALSE(is_linearly_equivalent(X, t2[i], t2[j]));
  }
}

TEST_CASE("budgets and bad places are rejected") {
  SplitCurve X = quintic_f7();
  CHECK_THROWS_AS(rr_dimension(X, inf_mult(X, 30)), std::invalid_argument);
  Divisor bad;
  bad.add_place(Place{PlaceKind::InfPlus, 0, 0}, 1);  // odd model
  CHECK_THROWS_AS(rr_dimension(X, bad), std::invalid_argument);
}
