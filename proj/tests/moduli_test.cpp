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

#include "curveinv/moduli.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace curveinv::moduli;

TEST_CASE("ramification counts") {
  CHECK(ramification_count(2, 1) == 2);
  CHECK(ramification_count(3, 2) == 0);
  CHECK(ramification_count(2, 2) == -2);
  CHECK(ramification_count(5, 3) == 0);
  CHECK(ramification_count(7, 2) == 8);
}

TEST_CASE("automorphism and moduli dimensions") {
  CHECK(aut_dim(0) == 3);
  CHECK(aut_dim(1) == 1);
  CHECK(aut_dim(5) == 0);
  CHECK(moduli_dim(0) == 0);
  CHECK(moduli_dim(1) == 1);
  CHECK(moduli_dim(3) == 6);
  CHECK(hyperelliptic_locus_dim(2) == 3);
  CHECK(hyperelliptic_locus_dim(5) == 9);
}

TEST_CASE("fixed base dimensions") {
  auto d = dim_fixed_base(4, 1);
  CHECK_FALSE(d.empty);
  CHECK(d.r == 6);
  CHECK(d.dim == 5);  // r - dim Aut, elliptic base

  d = dim_fixed_base(3, 2);
  CHECK(d.dim == 0);
  CHECK(d.r == 0);

  d = dim_fixed_base(2, 3);
  CHECK(d.empty);

  CHECK_THROWS_AS(dim_fixed_base(4, 0), std::invalid_argument);
}

TEST_CASE("full family dimension 2pi - g - 1") {
  auto d = dim_family(4, 1);
  CHECK(d.dim == 6);
  d = dim_family(3, 2);
  CHECK(d.dim == 3);  // dim M_2
  d = dim_family(2, 0);
  CHECK(d.dim == 3);  // every genus-2 curve double-covers the line
  CHECK(d.dim == moduli_dim(2));
  CHECK(dim_family(2, 3).empty);
}

TEST_CASE("hyperelliptic base family 2pi - 2g + 1") {
  CHECK(dim_family_hyperelliptic_base(5, 2).dim == 7);
  auto d = dim_family_hyperelliptic_base(3, 2);
  CHECK(d.dim == 3);  // r = 0: the whole genus-2 hyperelliptic locus
  CHECK(d.dim == hyperelliptic_locus_dim(2));
  CHECK(dim_family_hyperelliptic_base(2, 3).empty);
  CHECK_THROWS_AS(dim_family_hyperelliptic_base(5, 1), std::invalid_argument);
}

TEST_CASE("hyperelliptic covers of a fixed base") {
  // pi = 2g+1 over a hyperelliptic base: Im(q_h) has dim 2, Aut contributes 0
  CHECK(dim_hyp_fixed_base(5, 2, BaseKind::Hyperelliptic).dim == 2);
  CHECK(dim_hyp_fixed_base(7, 3, BaseKind::Hyperelliptic).dim == 2);
  // elliptic base at pi = 3: 3 - 1
  CHECK(dim_hyp_fixed_base(3, 1, BaseKind::Elliptic).dim == 2);
  // r = 2 rows: 1 for hyperelliptic (1 - 0), 1 for elliptic (2 - 1)
  CHECK(dim_hyp_fixed_base(4, 2, BaseKind::Hyperelliptic).dim == 1);
  CHECK(dim_hyp_fixed_base(2, 1, BaseKind::Elliptic).dim == 1);
  // r = 0 is rigid
  CHECK(dim_hyp_fixed_base(3, 2, BaseKind::Hyperelliptic).dim == 0);
  // any base neither elliptic nor hyperelliptic is empty
  CHECK(dim_hyp_fixed_base(7, 3, BaseKind::NonHyperelliptic).empty);
  CHECK(dim_hyp_fixed_base(7, 3, BaseKind::Generic).empty);
  // generic bases of genus 1 and 2 resolve to elliptic / hyperelliptic
  CHECK(dim_hyp_fixed_base(3, 1, BaseKind::Generic).dim == 2);
  CHECK(dim_hyp_fixed_base(4, 2, BaseKind::Generic).dim == 1);
  // outside the window
  CHECK(dim_hyp_fixed_base(9, 2, BaseKind::Hyperelliptic).empty);
}

TEST_CASE("hyperelliptic family dimension is pi inside the window") {
  CHECK(dim_hyp_family(5, 2).dim == 5);
  CHECK(dim_hyp_family(4, 2).dim == 4);
  CHECK(dim_hyp_family(7, 2).empty);  // r = 8 > 4
  CHECK(dim_hyp_family(2, 3).empty);  // r < 0
  CHECK(dim_hyp_family(3, 1).dim == 3);
  CHECK(dim_hyp_family(2, 1).dim == 2);
}

TEST_CASE("complement symmetry") {
  CHECK(complement_genus(5, 2) == 3);
  CHECK(ramification_count(5, 3) == 0);
  CHECK(complement_genus(2, 1) == 1);  // self-complementary
  CHECK(complement_genus(3, 1) == 2);
  CHECK_THROWS_AS(complement_genus(9, 2), std::invalid_argument);
  // equal dimensions on both sides of the window
  for (int pi = 2; pi <= 19; ++pi)
    for (int g = 1; g <= pi - 1; ++g) {
      int r = ramification_count(pi, g);
      if (r != 0 && r != 2 && r != 4) continue;
      auto a = dim_hyp_family(pi, g);
      auto b = dim_hyp_family(pi, pi - g);
      CHECK_FALSE(a.empty);
      CHECK_FALSE(b.empty);
      CHECK(a.dim == b.dim);
      CHECK(a.dim == pi);
    }
}

TEST_CASE("branch forms") {
  auto b = branch_form(5, 2, BaseKind::Hyperelliptic);  // pi = 2g+1
  CHECK(b.branch_case == BranchCase::TwoG12);
  CHECK(b.b_form == BForm::KplusG12);
  CHECK(b.expected_base_points == 0);

  b = branch_form(4, 2, BaseKind::Hyperelliptic);  // pi = 2g
  CHECK(b.branch_case == BranchCase::OneG12);
  CHECK(b.b_form == BForm::KplusP);
  CHECK(b.expected_base_points == 1);

  b = branch_form(3, 2, BaseKind::Hyperelliptic);  // pi = 2g-1
  CHECK_FALSE(b.branch_case.has_value());
  CHECK(b.b_form == BForm::SumG12plusPQ);
  CHECK(b.expected_base_points == 2);

  b = branch_form(3, 1, BaseKind::Elliptic);
  CHECK(b.branch_case == BranchCase::FourPointsPaired);
  b = branch_form(2, 1, BaseKind::Elliptic);
  CHECK(b.branch_case == BranchCase::TwoPointsFree);
}

TEST_CASE("grid invariants") {
  for (int pi = 2; pi <= 40; ++pi) {
    for (int g = 0; g <= 20; ++g) {
      int r = ramification_count(pi, g);
      // window equivalence
      bool in_window = r == 0 || r == 2 || r == 4;
      bool pi_in = pi == 2 * g - 1 || pi == 2 * g || pi == 2 * g + 1;
      CHECK(in_window == pi_in);
      auto full = dim_family(pi, g);
      CHECK(full.empty == (r < 0));
      if (!full.empty) CHECK(full.dim == 2 * pi - g - 1);
      auto hyp = dim_hyp_family(pi, g);
      CHECK(hyp.empty == !in_window);
      if (!hyp.empty) {
        CHECK(hyp.dim == pi);
        if (g >= 1) CHECK(hyp.dim <= full.dim);  // Ch inside C
      }
      if (g >= 2) {
        auto hb = dim_family_hyperelliptic_base(pi, g);
        CHECK(hb.empty == (r < 0));
        if (!hb.empty) CHECK(hb.dim == 2 * pi - 2 * g + 1);
      }
    }
    // strictly decreasing in g over the feasible range
    int prev = -1;
    for (int g = 0; g <= 20; ++g) {
      if (ramification_count(pi, g) < 0) break;
      auto d = dim_family(pi, g);
      if (prev >= 0) CHECK(d.dim < prev);
      prev = d.dim;
    }
  }
}
