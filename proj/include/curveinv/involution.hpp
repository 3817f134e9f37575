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

#ifndef CURVEINV_INVOLUTION_HPP_
#define CURVEINV_INVOLUTION_HPP_

#include <string>

#include "curveinv/curve.hpp"

namespace curveinv {

/// Order-2 automorphism of y^2 = f(x):
///   (x, y) -> ((a x + b)/(c x + d), e * y / (c x + d)^{g+1}),
/// entries over F_{p^k}. The pair (m, e) and (t m, t^{g+1} e) act identically;
/// construction normalizes the first nonzero entry of m to 1.
class Involution {
 public:
  /// Validates the substitution identity
  ///   e^2 f(x) = (c x + d)^{2g+2} f((a x + b)/(c x + d))
  /// and order exactly 2; throws std::invalid_argument otherwise.
  Involution(HyperCurve host, std::uint32_t ext_degree, Moebius m, FqElt e);

  const HyperCurve& host() const { return host_; }
  const FieldRef& field() const { return E_; }
  std::uint32_t ext_degree() const { return ext_degree_; }
  const Moebius& moebius() const { return m_; }
  FqElt y_factor() const { return e_; }

  bool is_canonical() const;  // moebius ~ identity, e = -1

  /// Action signature on a deterministic sample of 2g+4 x-values; two
  /// representations inducing the same action are the same involution.
  std::vector<FqElt> action_sample() const;

  bool operator==(const Involution& o) const;

 private:
  HyperCurve host_;
  FieldRef E_;
  std::uint32_t ext_degree_;
  Moebius m_;
  FqElt e_;
};

/// One geometric fixed place, with coordinates over F_{p^{2k}} when rational
/// there (always, except for Weierstrass places of the canonical involution
/// whose x-coordinate lives in a higher extension).
struct FixedPlace {
  bool x_rational = true;
  FqElt x0 = 0;          // valid when x_rational
  bool weierstrass = false;
  int sheet = 0;         // 0/1 distinguishes the two places over a split x0
};

struct RamificationReport {
  int r = 0;  // geometric fixed-point count; always even for involutions
  std::vector<FixedPlace> affine_fixed;
  int infinity_fixed = 0;  // 0, 1 or 2
  std::uint32_t extension_degree_used = 0;
  FieldRef coordinate_field;
};

/// The hyperelliptic involution (x, y) -> (x, -y).
Involution canonical_involution(const HyperCurve& c);

/// All involutions of C defined over F_{p^k}, canonical one first, then
/// sorted by (a, b, c, d, e). Budget p^k <= 50. Genus-1 hosts are rejected
/// unless allow_genus_one is set.
std::vector<Involution> find_involutions(const HyperCurve& c,
                                         std::uint32_t ext_degree,
                                         bool allow_genus_one = false);

RamificationReport fixed_points_geometric(const Involution& s);

/// (2 genus + 2 - r) / 4; throws std::logic_error when not an integer.
int quotient_genus(const Involution& s);

/// Composite map; std::nullopt with *why set when the composite is the
/// identity or has order > 2.
std::optional<Involution> compose(const Involution& s, const Involution& t,
                                  std::string* why = nullptr);

/// Quotient equation for involutions whose Moebius part is conjugate over the
/// base field to x -> -x: the conjugated model reads y^2 = f0(x^2), and the
/// quotient is v^2 = f0(u) when y is fixed, w^2 = u f0(u) when y is negated.
struct QuotientNormalForm {
  HyperCurve quotient;
  Poly f0;            // over the base field
  bool y_fixed;       // conjugated y-factor is +1
};
std::optional<QuotientNormalForm> quotient_curve_normal_form(const Involution& s);

}  // namespace curveinv

#endif  // CURVEINV_INVOLUTION_HPP_
