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

#ifndef CURVEINV_MODULI_HPP_
#define CURVEINV_MODULI_HPP_

#include <optional>
#include <string>

namespace curveinv {
namespace moduli {

/// Fixed-point count of a genus-g quotient involution on a genus-pi curve.
/// May be negative (infeasible pair).
int ramification_count(int pi, int g);

/// dim Aut(X) for a curve of genus g: 3, 1, 0.
int aut_dim(int g);

/// dim M_g: 0, 1, 3(g-1).
int moduli_dim(int g);

/// dim of the hyperelliptic locus inside M_g, i.e. 2g-1 for g >= 2.
int hyperelliptic_locus_dim(int g);

/// Result of a dimension query: empty family or a dimension with case label.
struct FamilyDim {
  bool empty = false;
  int dim = 0;
  int r = 0;
  std::string case_label;

  static FamilyDim none(int r, std::string label) {
    return FamilyDim{true, 0, r, std::move(label)};
  }
  static FamilyDim of(int d, int r, std::string label) {
    return FamilyDim{false, d, r, std::move(label)};
  }
};

/// Curves of genus pi with an involution over one fixed curve of genus g >= 1.
FamilyDim dim_fixed_base(int pi, int g);

/// Curves of genus pi with an involution of genus g: 2 pi - g - 1 when r >= 0.
FamilyDim dim_family(int pi, int g);

/// Same family with the base constrained to the hyperelliptic locus, g >= 2:
/// 2 pi - 2 g + 1 when r >= 0.
FamilyDim dim_family_hyperelliptic_base(int pi, int g);

enum class BaseKind { Generic, Elliptic, Hyperelliptic, NonHyperelliptic };

/// Hyperelliptic covers of one fixed base: 2/1/0 for r = 4/2/0 over an
/// elliptic or hyperelliptic base, empty otherwise.
FamilyDim dim_hyp_fixed_base(int pi, int g, BaseKind kind);

/// Hyperelliptic curves of genus pi with an involution of genus g: pi inside
/// the window r in {0, 2, 4}, empty outside.
FamilyDim dim_hyp_family(int pi, int g);

/// pi - g; the window pairs (pi, g) and (pi, pi-g) carry equal families.
int complement_genus(int pi, int g);

enum class BranchCase { TwoG12, FourPointsPaired, OneG12, TwoPointsFree };
enum class BForm { KplusG12, KplusP, SumG12plusPQ };

struct BranchForm {
  std::optional<BranchCase> branch_case;  // set for r in {2, 4}
  BForm b_form;
  int expected_base_points = 0;  // 0 / 1 / 2 for pi = 2g+1 / 2g / 2g-1
};

BranchForm branch_form(int pi, int g, BaseKind kind);

}  // namespace moduli
}  // namespace curveinv

#endif  // CURVEINV_MODULI_HPP_
