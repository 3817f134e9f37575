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

#include "curveinv/field.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace curveinv;

TEST_CASE("field axioms on random samples") {
  for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{7, 1},
                      {5, 2},
                      {3, 4},
                      {13, 1},
                      {11, 2}}) {
    auto F = Fq::make(p, k);
    test::Rng rng(0x1234 + p * 100 + k);
    for (int it = 0; it < 200; ++it) {
      FqElt a = rng.next() % F->q();
      FqElt b = rng.next() % F->q();
      FqElt c = rng.next() % F->q();
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a != 0) {
        CHECK(F->mul(a, F->inv(a)) == 1);
      }
      CHECK(F->mul(a, b) == F->mul(b, a));
      CHECK(F->add(F->sub(a, b), b) == a);
    }
    // squares: exactly (q-1)/2 nonzero squares, sqrt squares back
    int squares = 0;
    for (FqElt a = 1; a < F->q(); ++a) {
      if (F->is_square(a)) {
        ++squares;
        auto s = F->sqrt(a);
        REQUIRE(s.has_value());
        CHECK(F->mul(*s, *s) == a);
      } else {
        CHECK(!F->sqrt(a).has_value());
      }
    }
    CHECK(squares == static_cast<int>((F->q() - 1) / 2));
  }
}

TEST_CASE("characteristic 2 and bad moduli rejected") {
  CHECK_THROWS_WITH_AS(Fq::make(2, 1), "characteristic 2 unsupported",
                       std::invalid_argument);
  CHECK_THROWS_AS(Fq::make(9, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(Fq::make(1009, 1), std::invalid_argument);  // > 997
  CHECK_THROWS_AS(Fq::make(3, 14), std::invalid_argument);  // 3^14 > 10^6
}

TEST_CASE("embeddings preserve arithmetic") {
  auto F = Fq::make(5, 2);
  auto E = Fq::make(5, 4);
  FieldEmbedding emb(F, E);
  for (FqElt a = 0; a < F->q(); ++a)
    for (FqElt b = 0; b < F->q(); b += 3) {
      CHECK(emb(F->add(a, b)) == E->add(emb(a), emb(b)));
      CHECK(emb(F->mul(a, b)) == E->mul(emb(a), emb(b)));
    }
  // identity embedding
  FieldEmbedding id(F, F);
  for (FqElt a = 0; a < F->q(); ++a) CHECK(id(a) == a);
}
