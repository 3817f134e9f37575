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

namespace curveinv {
namespace moduli {

namespace {
void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
void internal(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}
}  // namespace

int ramification_count(int pi, int g) {
  require(pi >= 2 && g >= 0, "need pi >= 2 and g >= 0");
  return 2 * (pi - 1) - 4 * (g - 1);
}

int aut_dim(int g) {
  require(g >= 0, "genus must be non-negative");
  return g == 0 ? 3 : g == 1 ? 1 : 0;
}

int moduli_dim(int g) {
  require(g >= 0, "genus must be non-negative");
  return g == 0 ? 0 : g == 1 ? 1 : 3 * (g - 1);
}

int hyperelliptic_locus_dim(int g) {
  require(g >= 2, "hyperelliptic locus needs g >= 2");
  return 2 * g - 1;
}

FamilyDim dim_fixed_base(int pi, int g) {
  require(g >= 1, "fixed-base proposition requires g > 0");
  int r = ramification_count(pi, g);
  if (r < 0) return FamilyDim::none(r, "r<0: empty");
  if (r == 0) return FamilyDim::of(0, r, "r=0: rigid");
  return FamilyDim::of(r - aut_dim(g), r, "r>0: r - dim Aut(X)");
}

FamilyDim dim_family(int pi, int g) {
  int r = ramification_count(pi, g);
  if (r < 0) return FamilyDim::none(r, "r<0: empty");
  int closed = 2 * pi - g - 1;
  // the case arithmetic must agree with the closed form
  internal(g >= 1 || r > 0, "g=0 forces r>0 for pi >= 2");
  internal(g != 1 || r > 0, "g=1 forces r>0 for pi >= 2");
  int by_cases = r == 0 ? moduli_dim(g) : r - aut_dim(g) + moduli_dim(g);
  internal(by_cases == closed, "case arithmetic disagrees with 2pi-g-1");
  return FamilyDim::of(closed, r,
                       r == 0 ? "r=0: dim M_g" : "r>0: r - dim Aut(X) + dim M_g");
}

FamilyDim dim_family_hyperelliptic_base(int pi, int g) {
  require(g >= 2, "hyperelliptic base needs g >= 2");
  int r = ramification_count(pi, g);
  if (r < 0) return FamilyDim::none(r, "r<0: empty");
  int closed = 2 * pi - 2 * g + 1;
  int by_cases = (r == 0 ? 0 : r - aut_dim(g)) + hyperelliptic_locus_dim(g);
  internal(by_cases == closed, "case arithmetic disagrees with 2pi-2g+1");
  return FamilyDim::of(closed, r, "hyperelliptic base: r + (2g-1)");
}

FamilyDim dim_hyp_fixed_base(int pi, int g, BaseKind kind) {
  require(g >= 1, "fixed-base family requires g >= 1");
  if (kind == BaseKind::Elliptic) require(g == 1, "elliptic base means g = 1");
  if (kind == BaseKind::Hyperelliptic)
    require(g >= 2, "hyperelliptic base needs g >= 2");
  int r = ramification_count(pi, g);
  if (kind == BaseKind::Generic) {
    // a generic base is elliptic for g = 1, hyperelliptic for g = 2, neither beyond
    if (g == 1)
      kind = BaseKind::Elliptic;
    else if (g == 2)
      kind = BaseKind::Hyperelliptic;
    else
      return FamilyDim::none(r, "generic base of genus >= 3: empty");
  }
  if (kind == BaseKind::NonHyperelliptic) {
    require(g >= 3, "a base of genus <= 2 is elliptic or hyperelliptic");
    return FamilyDim::none(r, "base neither elliptic nor hyperelliptic: empty");
  }
  if (r != 0 && r != 2 && r != 4)
    return FamilyDim::none(r, "outside window r in {0,2,4}: empty");
  if (r == 0) return FamilyDim::of(0, r, "r=0: rigid");
  // dim Im(q_h) minus dim Aut(X)
  int im_qh = kind == BaseKind::Elliptic ? (r == 4 ? 3 : 2) : (r == 4 ? 2 : 1);
  int dim = im_qh - aut_dim(g);
  internal(dim == (r == 4 ? 2 : 1), "Im(q_h) arithmetic disagrees with 2/1");
  return FamilyDim::of(dim, r,
                       r == 4 ? "r=4: dim Im(q_h) - dim Aut(X)"
                              : "r=2: dim Im(q_h) - dim Aut(X)");
}

FamilyDim dim_hyp_family(int pi, int g) {
  int r = ramification_count(pi, g);
  if (r != 0 && r != 2 && r != 4)
    return FamilyDim::none(r, r < 0 ? "r<0: empty" : "r>4: empty");
  internal(pi == 2 * g - 1 || pi == 2 * g || pi == 2 * g + 1,
           "window r in {0,2,4} must mean pi in {2g-1, 2g, 2g+1}");
  // glue: dim Ch_pi^X plus the dimension of the base locus
  int base_locus = g == 1 ? moduli_dim(1) : hyperelliptic_locus_dim(g);
  int fixed = r == 4 ? 2 : r == 2 ? 1 : 0;
  internal(fixed + base_locus == pi, "Ch decomposition disagrees with pi");
  return FamilyDim::of(pi, r, "window: dim Ch = pi");
}

int complement_genus(int pi, int g) {
  require(g >= 1, "complement needs g >= 1");
  int r = ramification_count(pi, g);
  require(r == 0 || r == 2 || r == 4, "outside window r in {0,2,4}");
  return pi - g;
}

BranchForm branch_form(int pi, int g, BaseKind kind) {
  require(kind == BaseKind::Elliptic || kind == BaseKind::Hyperelliptic,
          "branch forms exist over elliptic or hyperelliptic bases only");
  if (kind == BaseKind::Elliptic) require(g == 1, "elliptic base means g = 1");
  if (kind == BaseKind::Hyperelliptic)
    require(g >= 2, "hyperelliptic base needs g >= 2");
  int r = ramification_count(pi, g);
  require(r == 0 || r == 2 || r == 4, "outside window r in {0,2,4}");
  BranchForm out;
  if (r == 4) {
    out.branch_case = kind == BaseKind::Hyperelliptic ? BranchCase::TwoG12
                                                      : BranchCase::FourPointsPaired;
    out.b_form = BForm::KplusG12;
    out.expected_base_points = 0;
  } else if (r == 2) {
    out.branch_case = kind == BaseKind::Hyperelliptic ? BranchCase::OneG12
                                                      : BranchCase::TwoPointsFree;
    out.b_form = BForm::KplusP;
    out.expected_base_points = 1;
  } else {
    out.branch_case = std::nullopt;
    out.b_form = BForm::SumG12plusPQ;
    out.expected_base_points = 2;
  }
  return out;
}

}  // namespace moduli
}  // namespace curveinv
