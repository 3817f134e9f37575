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

#ifndef CURVEINV_RIEMANN_ROCH_HPP_
#define CURVEINV_RIEMANN_ROCH_HPP_

#include "curveinv/divisor.hpp"

namespace curveinv {

/// dim L(D) for L(D) = { h = (a(x) + b(x) y)/d(x) : div(h) + D >= 0 } + {0},
/// by exact valuation constraints at every support place and every candidate
/// pole, solved as a nullspace dimension over the context field.
/// Budget: deg D <= 6g+6.
int rr_dimension(const SplitCurve& X, const Divisor& D);

/// deg(D1 - D2) == 0 and h^0(D1 - D2) == 1. Throws on degree mismatch.
bool is_linearly_equivalent(const SplitCurve& X, const Divisor& d1,
                            const Divisor& d2);

struct LinearSystemReport {
  int h0 = 0;
  std::vector<Place> base_points;
};

/// Base points of |D| over the context field: places P with
/// h^0(D - P) == h^0(D). Throws "empty system" when h^0(D) == 0.
LinearSystemReport base_points(const SplitCurve& X, const Divisor& D);

/// Representatives of the 2^{2g} two-torsion divisor classes: for each even
/// subset S of the Weierstrass places modulo complementation, the class of
/// sum(S) - (|S|/2) g12, deduplicated by linear equivalence. Requires the
/// Weierstrass places to split over the context field.
std::vector<Divisor> two_torsion_classes(const SplitCurve& X);

}  // namespace curveinv

#endif  // CURVEINV_RIEMANN_ROCH_HPP_
