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

#ifndef CURVEINV_CENSUS_HPP_
#define CURVEINV_CENSUS_HPP_

#include <map>
#include <string>

#include "curveinv/involution.hpp"

namespace curveinv {
namespace census {

/// One representative per isomorphism class of hyperelliptic curves of the
/// given genus over F_q (q an odd prime power): orbits of squarefree f of
/// degree 2g+1 or 2g+2 under the weight-(2g+2) PGL2 action and square
/// scalars, each represented by its lexicographically least member.
/// Budgets: q <= 13 for genus <= 2, q <= 7 for genus 3.
std::vector<HyperCurve> enumerate_hyperelliptic(int genus, std::uint32_t q);

struct CensusReport {
  std::uint32_t q = 0;
  int genus = 0;
  long total_classes = 0;
  /// quotient genus -> number of classes admitting an involution of that genus
  std::map<int, long> involution_distribution;
  long noncanonical_involutions = 0;
  std::vector<std::string> window_violations;  // must stay empty
};

CensusReport survey_involutions(int genus, std::uint32_t q);

struct ComplementReport {
  long classes = 0;
  long involutions_checked = 0;
  long failures = 0;
  long normal_form_checks = 0;  // quotient-equation genus cross-checks
  std::vector<std::string> witnesses;
};

/// For every class and every non-canonical involution s: the composite with
/// the canonical involution has quotient genus pi - genus(s), the Hurwitz
/// count is consistent, and the normal-form quotient (when the Moebius fixed
/// points are rational) has the genus the fixed-point count predicts.
ComplementReport verify_complement_corpus(int genus, std::uint32_t q);

struct DimensionEstimate {
  std::string family_tag;
  int pi = 0;
  int raw = 0;             // free coefficients under the stated normalization
  int group_dim = 0;       // residual equivalences preserving the normal form
  int stabilizer_dim = 0;  // generic stabilizer, brute-forced on a sample
  int estimated_dim = 0;   // raw - (group_dim - stabilizer_dim)
  std::string normalization;
  bool sample_has_noncanonical_involution = false;
  std::string note;
};

/// Parameter count for the normal-form families "y^2=f(x^2)" (deg f = pi+1,
/// estimated dimension pi) and "y^2=x*f(x^2)" (deg f = pi, estimated
/// dimension pi-1; its generic member has no non-canonical involution).
DimensionEstimate family_parameter_count(const std::string& family_tag, int pi);

enum class BranchBase { Elliptic, HyperellipticGenus2 };

struct BranchLocusResult {
  BranchBase base;
  int r = 0;
  std::vector<std::pair<std::uint32_t, long long>> counts;  // (q, count)
  std::optional<int> exponent;  // empty = inconclusive
  std::string note;
};

/// Counts effective divisors in the admissible branch classes over each F_q
/// (members of the linear systems the classification allows, non-reduced
/// members included so the counts track the full closure), then pins the
/// growth exponent round(log count / log q), requiring agreement across q.
BranchLocusResult branch_locus_dimension(BranchBase base, int r,
                                         const std::vector<std::uint32_t>& qs);

}  // namespace census
}  // namespace curveinv

#endif  // CURVEINV_CENSUS_HPP_
