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

#ifndef CURVEINV_POLY_HPP_
#define CURVEINV_POLY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "curveinv/field.hpp"

namespace curveinv {

/// Dense univariate polynomial over an Fq context, lowest degree first.
/// Normalized form has no trailing zero coefficients; the zero polynomial
/// has an empty coefficient vector.
struct Poly {
  FieldRef F;
  std::vector<FqElt> c;

  Poly() = default;
  Poly(FieldRef field, std::vector<FqElt> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  FqElt coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  FqElt lead() const { return c.empty() ? 0 : c.back(); }

  bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_from_ints(const FieldRef& F, const std::vector<std::uint64_t>& ints);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, FqElt s);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
Poly derivative(const Poly& a);
Poly make_monic(const Poly& a);
FqElt eval(const Poly& a, FqElt x);

/// Evaluate a over a bigger field through an embedding of its coefficients.
FqElt eval_embedded(const Poly& a, const FieldEmbedding& emb, FqElt x);

/// Coefficient-wise embedding into a bigger field.
Poly embed(const Poly& a, const FieldEmbedding& emb);

FqElt resultant(const Poly& a, const Poly& b);
FqElt discriminant(const Poly& a);

/// True iff gcd(f, f') is constant. Throws on the zero polynomial.
bool is_squarefree(const Poly& f);

/// Lexicographically smallest monic irreducible of degree k over F_p.
Poly find_irreducible(std::uint32_t p, std::uint32_t k);

/// All roots of f (over F_p) in F_{p^k}, by exhaustive scan. Budget p^k <= 10^6.
struct RootsInExtension {
  FieldRef ext;
  std::vector<FqElt> roots;  // sorted by encoding
};
RootsInExtension roots_in_extension(const Poly& f, std::uint32_t k);

/// Roots of f in its own coefficient field.
std::vector<FqElt> roots_in_field(const Poly& f);

std::string to_string(const Poly& f, const std::string& var = "x");

}  // namespace curveinv

#endif  // CURVEINV_POLY_HPP_
