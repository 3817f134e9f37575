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

#include "curveinv/census.hpp"

#include <set>

#include "curveinv/moduli.hpp"
#include "curveinv/riemann_roch.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace curveinv;
using namespace curveinv::census;

TEST_CASE("genus-1 classes over F_5 have the right shape") {
  auto cs = enumerate_hyperelliptic(1, 5);
  CHECK(cs.size() == 22);  // frozen from the orbit census
  for (auto& c : cs) {
    CHECK(c.genus == 1);
    CHECK((c.f.degree() == 3 || c.f.degree() == 4));
    CHECK(is_squarefree(c.f));
  }
}

TEST_CASE("genus-2 classes over F_5: representatives and naive oracle") {
  auto cs = enumerate_hyperelliptic(2, 5);
  CHECK(cs.size() == 285);  // frozen from the orbit census
  for (auto& c : cs) {
    CHECK(c.genus == 2);
    CHECK((c.f.degree() == 5 || c.f.degree() == 6));
    CHECK(is_squarefree(c.f));
  }
  // representatives are pairwise non-isomorphic: group them with iso_test
  // directly (the naive pairing oracle), bucketed by cheap point counts
  auto point_count = [](const HyperCurve& c, std::uint32_t ext) {
    auto E = Fq::make(c.F->p(), ext);
    FieldEmbedding emb(c.F, E);
    long n = 0;
    for (FqElt x = 0; x < E->q(); ++x) {
      FqElt v = eval_embedded(c.f, emb, x);
      if (v == 0)
        ++n;
      else if (E->is_square(v))
        n += 2;
    }
    if (c.f.degree() % 2 == 1)
      n += 1;
    else if (E->is_square(emb(c.f.lead())))
      n += 2;
    return n;
  };
  std::map<std::pair<long, long>, std::vector<const HyperCurve*>> buckets;
  for (auto& c : cs)
    buckets[{point_count(c, 1), point_count(c, 2)}].push_back(&c);
  long naive_classes = 0;
  for (auto& [key, bucket] : buckets) {
    std::vector<const HyperCurve*> reps;
    for (auto* c : bucket) {
      bool fresh = true;
      for (auto* r : reps)
        if (iso_test(*c, *r, 1)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(c);
    }
    naive_classes += static_cast<long>(reps.size());
  }
  CHECK(naive_classes == 285);
}

TEST_CASE("census budgets") {
  CHECK_THROWS_AS(enumerate_hyperelliptic(2, 17), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_hyperelliptic(3, 11), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_hyperelliptic(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_hyperelliptic(2, 8), std::invalid_argument);
}

TEST_CASE("involution survey, genus 2 over F_5") {
  auto rep = survey_involutions(2, 5);
  CHECK(rep.total_classes == 285);
  CHECK(rep.window_violations.empty());
  CHECK(rep.noncanonical_involutions == 102);  // frozen
  // distribution supported on quotient genus 0 (delta) and 1
  CHECK(rep.involution_distribution.size() == 2);
  CHECK(rep.involution_distribution.at(0) == 285);
  CHECK(rep.involution_distribution.at(1) == 42);  // frozen
}

TEST_CASE("complement corpus, genus 2 over F_5") {
  auto rep = verify_complement_corpus(2, 5);
  CHECK(rep.classes == 285);
  CHECK(rep.failures == 0);
  CHECK(rep.witnesses.empty());
  // one check per (class, involution) pair, delta included
  CHECK(rep.involutions_checked == 285 + 102);
  CHECK(rep.normal_form_checks > 0);
}

TEST_CASE("family parameter counts") {
  for (int pi = 2; pi <= 5; ++pi) {
    auto est = family_parameter_count("y^2=f(x^2)", pi);
    CHECK(est.raw == pi + 1);
    CHECK(est.group_dim == 1);
    CHECK(est.stabilizer_dim == 0);
    CHECK(est.estimated_dim == pi);
    CHECK(est.estimated_dim == est.raw - (est.group_dim - est.stabilizer_dim));
    CHECK(est.sample_has_noncanonical_involution);
  }
  // the odd-form family sits one below pi and its generic member has no
  // involution beyond the canonical one
  for (int pi = 2; pi <= 5; ++pi) {
    auto est = family_parameter_count("y^2=x*f(x^2)", pi);
    CHECK(est.raw == pi);
    CHECK(est.estimated_dim == pi - 1);
    CHECK_FALSE(est.sample_has_noncanonical_involution);
  }
  CHECK_THROWS_AS(family_parameter_count("y^2=f(x^3)", 3), std::invalid_argument);
  // the full hyperelliptic family of genus pi has 2 pi - 1 parameters:
  // 2 pi + 2 coefficients modulo the 3-dimensional Moebius action
  for (int pi = 2; pi <= 5; ++pi)
    CHECK((2 * pi + 2) - 3 == moduli::hyperelliptic_locus_dim(pi));
}

TEST_CASE("branch locus exponents") {
  std::vector<std::uint32_t> qs{5, 7, 11};
  auto r = branch_locus_dimension(BranchBase::HyperellipticGenus2, 4, qs);
  REQUIRE(r.exponent.has_value());
  CHECK(*r.exponent == 2);
  r = branch_locus_dimension(BranchBase::HyperellipticGenus2, 2, qs);
  REQUIRE(r.exponent.has_value());
  CHECK(*r.exponent == 1);
  r = branch_locus_dimension(BranchBase::Elliptic, 2, qs);
  REQUIRE(r.exponent.has_value());
  CHECK(*r.exponent == 2);
  r = branch_locus_dimension(BranchBase::Elliptic, 4, qs);
  REQUIRE(r.exponent.has_value());
  CHECK(*r.exponent == 3);

  CHECK_THROWS_AS(branch_locus_dimension(BranchBase::Elliptic, 3, qs),
                  std::invalid_argument);
  CHECK_THROWS_AS(branch_locus_dimension(BranchBase::Elliptic, 2, {5}),
                  std::invalid_argument);
}

TEST_CASE("twist sample generator matches the pinned stream") {
  auto sample = test::twist_sample_f7();
  REQUIRE(sample.size() == 50);
  // first member frozen so the generator cannot drift silently
  CHECK(sample[0] == std::vector<std::uint32_t>{4, 0, 0, 3, 1, 4, 1});
}
