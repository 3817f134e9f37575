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

#ifndef CURVEINV_SRC_LAURENT_HPP_
#define CURVEINV_SRC_LAURENT_HPP_

#include <stdexcept>

#include "curveinv/poly.hpp"

namespace curveinv {
namespace detail {

/// Truncated Laurent series: sum of c[i] t^{lo+i} plus O(t^{hi}).
/// Coefficients are reliable exactly for exponents in [lo, hi).
struct LSeries {
  FieldRef F;
  int lo = 0;
  int hi = 0;
  std::vector<FqElt> c;

  FqElt coeff(int e) const {
    if (e >= hi) throw std::logic_error("laurent coefficient beyond precision");
    if (e < lo) return 0;
    return c[e - lo];
  }
};

inline LSeries ls_make(FieldRef F, int lo, std::vector<FqElt> c, int hi) {
  if (static_cast<int>(c.size()) != hi - lo)
    throw std::logic_error("laurent length mismatch");
  return LSeries{std::move(F), lo, hi, std::move(c)};
}

inline LSeries ls_zero(FieldRef F, int hi) { return LSeries{std::move(F), hi, hi, {}}; }

inline LSeries ls_add(const LSeries& a, const LSeries& b) {
  int hi = std::min(a.hi, b.hi);
  int lo = std::min(a.lo, b.lo);
  if (lo > hi) lo = hi;
  std::vector<FqElt> c(hi - lo, 0);
  for (int e = lo; e < hi; ++e) {
    FqElt x = e >= a.lo && e < a.hi ? a.c[e - a.lo] : 0;
    FqElt y = e >= b.lo && e < b.hi ? b.c[e - b.lo] : 0;
    c[e - lo] = a.F->add(x, y);
  }
  return ls_make(a.F, lo, std::move(c), hi);
}

inline LSeries ls_scale(const LSeries& a, FqElt s) {
  auto c = a.c;
  for (auto& x : c) x = a.F->mul(x, s);
  return ls_make(a.F, a.lo, std::move(c), a.hi);
}

inline LSeries ls_mul(const LSeries& a, const LSeries& b) {
  int lo = a.lo + b.lo;
  int hi = std::min(a.lo + b.hi, b.lo + a.hi);
  if (a.c.empty() || b.c.empty()) return ls_zero(a.F, hi);
  std::vector<FqElt> c(hi - lo, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      int e = static_cast<int>(i + j);
      if (e >= hi - lo) break;
      c[e] = a.F->add(c[e], a.F->mul(a.c[i], b.c[j]));
    }
  }
  return ls_make(a.F, lo, std::move(c), hi);
}

inline LSeries ls_shift(LSeries a, int n) {
  a.lo += n;
  a.hi += n;
  return a;
}

/// Reciprocal of a series whose bottom coefficient is nonzero.
inline LSeries ls_inverse(const LSeries& a) {
  if (a.c.empty() || a.c[0] == 0)
    throw std::logic_error("laurent inverse needs a unit bottom coefficient");
  const Fq& F = *a.F;
  size_t n = a.c.size();
  std::vector<FqElt> b(n, 0);
  FqElt inv0 = F.inv(a.c[0]);
  b[0] = inv0;
  for (size_t m = 1; m < n; ++m) {
    FqElt s = 0;
    for (size_t i = 1; i <= m; ++i)
      s = F.add(s, F.mul(i < a.c.size() ? a.c[i] : 0, b[m - i]));
    b[m] = F.neg(F.mul(s, inv0));
  }
  int lo = -a.lo;
  return ls_make(a.F, lo, std::move(b), lo + static_cast<int>(n));
}

/// Square root of a series with even bottom exponent, branch chosen by the
/// caller through root0 with root0^2 = bottom coefficient.
inline LSeries ls_sqrt(const LSeries& a, FqElt root0) {
  if (a.c.empty() || a.c[0] == 0 || a.lo % 2 != 0)
    throw std::logic_error("laurent sqrt needs a unit with even valuation");
  const Fq& F = *a.F;
  if (F.mul(root0, root0) != a.c[0])
    throw std::logic_error("sqrt branch does not square to the bottom coefficient");
  size_t n = a.c.size();
  std::vector<FqElt> s(n, 0);
  s[0] = root0;
  FqElt inv2s0 = F.inv(F.add(root0, root0));
  for (size_t m = 1; m < n; ++m) {
    FqElt acc = m < a.c.size() ? a.c[m] : 0;
    for (size_t i = 1; i < m; ++i)
      acc = F.sub(acc, F.mul(s[i], s[m - i]));
    s[m] = F.mul(acc, inv2s0);
  }
  int lo = a.lo / 2;
  return ls_make(a.F, lo, std::move(s), lo + static_cast<int>(n));
}

/// Coefficients of P(x0 + t) (exact Taylor shift, in-place Horner cascade).
inline std::vector<FqElt> taylor_shift(const Poly& P, FqElt x0) {
  const Fq& F = *P.F;
  if (P.is_zero()) return {0};
  std::vector<FqElt> b(P.c);
  const size_t n = b.size();
  for (size_t k = 0; k + 1 < n; ++k)
    for (size_t i = n - 1; i-- > k;)
      b[i] = F.add(b[i], F.mul(x0, b[i + 1]));
  return b;
}

/// Evaluate P at x0 + S where S has positive valuation; result is a power
/// series valid to the precision of S.
inline LSeries ls_poly_at(const Poly& P, FqElt x0, const LSeries& S) {
  if (S.lo < 1) throw std::logic_error("series substitution needs positive valuation");
  const Fq& F = *P.F;
  const int prec = S.hi;
  if (prec <= 0) return ls_zero(P.F, prec);
  std::vector<FqElt> sv(prec, 0);
  for (int e = std::max(S.lo, 0); e < S.hi; ++e) sv[e] = S.c[e - S.lo];
  auto b = taylor_shift(P, x0);
  std::vector<FqElt> acc(prec, 0);
  for (size_t i = b.size(); i-- > 0;) {
    std::vector<FqElt> nx(prec, 0);
    for (int u = 0; u < prec; ++u) {
      if (!acc[u]) continue;
      for (int v = 0; u + v < prec; ++v)
        if (sv[v]) nx[u + v] = F.add(nx[u + v], F.mul(acc[u], sv[v]));
    }
    nx[0] = F.add(nx[0], b[i]);
    acc = std::move(nx);
  }
  return ls_make(P.F, 0, std::move(acc), prec);
}

/// P(1/t^step) as an exact Laurent polynomial, padded to precision hi.
inline LSeries ls_poly_at_infinity(const Poly& P, int step, int hi) {
  if (P.is_zero()) return ls_zero(P.F, hi);
  int lo = -step * P.degree();
  std::vector<FqElt> c(hi - lo, 0);
  for (int i = 0; i <= P.degree(); ++i) {
    int e = -step * i;
    if (e < hi) c[e - lo] = P.c[i];
  }
  return ls_make(P.F, lo, std::move(c), hi);
}

}  // namespace detail
}  // namespace curveinv

#endif  // CURVEINV_SRC_LAURENT_HPP_
