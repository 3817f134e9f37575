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

#include "curveinv/riemann_roch.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "laurent.hpp"

namespace curveinv {

namespace {

using detail::LSeries;

LSeries ls_strip(const LSeries& s) {
  size_t i = 0;
  while (i < s.c.size() && s.c[i] == 0) ++i;
  if (i == s.c.size())
    throw std::logic_error("stripping a series that vanishes to precision");
  return detail::ls_make(s.F, s.lo + static_cast<int>(i),
                         std::vector<FqElt>(s.c.begin() + i, s.c.end()), s.hi);
}

// x-offset series at a Weierstrass place: s(t) with f(x0 + s) = t^2,
// s = t^2/f'(x0) + higher order, even exponents only.
LSeries weierstrass_xoffset(const Poly& f, FqElt x0, int prec) {
  const Fq& F = *f.F;
  auto cs = detail::taylor_shift(f, x0);
  if (cs[0] != 0 || cs.size() < 2 || cs[1] == 0)
    throw std::logic_error("not a simple Weierstrass point");
  FqElt c1inv = F.inv(cs[1]);
  // t^2 as a series
  std::vector<FqElt> t2(prec > 2 ? prec : 3, 0);
  if (2 < static_cast<int>(t2.size())) t2[2] = 1;
  LSeries T2 = detail::ls_make(f.F, 0, std::move(t2), std::max(prec, 3));
  LSeries s = detail::ls_scale(T2, c1inv);
  for (int it = 0; it <= prec / 2 + 2; ++it) {
    // s <- (t^2 - sum_{j>=2} cs[j] s^j) / cs[1]
    LSeries acc = detail::ls_zero(f.F, s.hi);
    LSeries pw = detail::ls_mul(s, s);
    for (size_t j = 2; j < cs.size(); ++j) {
      if (cs[j]) acc = detail::ls_add(acc, detail::ls_scale(pw, cs[j]));
      if (j + 1 < cs.size()) pw = detail::ls_mul(pw, s);
    }
    // pad precision losses back up: exponents >= prec are irrelevant
    LSeries rhs = detail::ls_add(T2, detail::ls_scale(acc, F.neg(F.one())));
    rhs.hi = std::min(rhs.hi, std::max(prec, 3));
    LSeries next = detail::ls_scale(rhs, c1inv);
    // refill to full precision window [2, prec)
    std::vector<FqElt> cc(std::max(prec, 3) - 2, 0);
    for (int e = 2; e < std::max(prec, 3); ++e)
      if (e >= next.lo && e < next.hi) cc[e - 2] = next.c[e - next.lo];
    s = detail::ls_make(f.F, 2, std::move(cc), std::max(prec, 3));
  }
  return s;
}

struct CandidateBasis {
  int A = 0, B = 0;  // degree bounds for the x-part and the y-part
  int count() const { return (A + 1) + (B >= 0 ? B + 1 : 0); }
};

// Laurent series of every candidate (x^i / d, x^j y / d) at the place Q,
// each valid at least to exponent habs (exclusive).
std::vector<LSeries> candidate_series_at(const SplitCurve& X, const Poly& d,
                                         const CandidateBasis& cb,
                                         const Place& Q, int habs) {
  const FieldRef& Fr = X.ctx();
  const Fq& F = *Fr;
  const Poly& f = X.f();
  const int g = X.genus();
  std::vector<LSeries> out;
  out.reserve(cb.count());

  auto push_family = [&](const std::vector<LSeries>& xpow, const LSeries& y,
                         const LSeries& dinv) {
    for (int i = 0; i <= cb.A; ++i) out.push_back(detail::ls_mul(xpow[i], dinv));
    for (int j = 0; j <= cb.B; ++j)
      out.push_back(detail::ls_mul(detail::ls_mul(xpow[j], y), dinv));
  };

  if (Q.kind == PlaceKind::Affine && Q.y0 != 0) {
    int v = 0;  // multiplicity of x0 in d
    {
      auto sh = detail::taylor_shift(d, Q.x0);
      while (v < static_cast<int>(sh.size()) && sh[v] == 0) ++v;
    }
    const int H = habs + 2 * v + 4;
    // x = x0 + t
    std::vector<LSeries> xpow(cb.A + std::max(cb.B, 0) + 2);
    std::vector<FqElt> one(H, 0);
    one[0] = 1;
    xpow[0] = detail::ls_make(Fr, 0, std::move(one), H);
    std::vector<FqElt> xc(H, 0);
    xc[0] = Q.x0;
    if (H > 1) xc[1] = 1;
    LSeries xs = detail::ls_make(Fr, 0, std::move(xc), H);
    for (size_t i = 1; i < xpow.size(); ++i)
      xpow[i] = detail::ls_mul(xpow[i - 1], xs);
    // y = sqrt(f(x0 + t)), branch y0
    auto fs = detail::taylor_shift(f, Q.x0);
    fs.resize(H, 0);
    LSeries fser = detail::ls_make(Fr, 0, std::move(fs), H);
    LSeries y = detail::ls_sqrt(fser, Q.y0);
    // 1/d
    auto ds = detail::taylor_shift(d, Q.x0);
    ds.resize(H + v, 0);
    LSeries dser = detail::ls_make(Fr, 0, std::move(ds), H + v);
    LSeries dinv = detail::ls_inverse(ls_strip(dser));
    push_family(xpow, y, dinv);
    return out;
  }

  if (Q.kind == PlaceKind::Affine) {  // Weierstrass place, uniformizer y
    int v = 0;
    {
      auto sh = detail::taylor_shift(d, Q.x0);
      while (v < static_cast<int>(sh.size()) && sh[v] == 0) ++v;
    }
    const int H = habs + 4 * v + 6;
    LSeries S = weierstrass_xoffset(f, Q.x0, H);
    // x powers through substitution of x0 + S
    std::vector<LSeries> xpow(cb.A + std::max(cb.B, 0) + 2);
    std::vector<FqElt> one(H, 0);
    one[0] = 1;
    xpow[0] = detail::ls_make(Fr, 0, std::move(one), H);
    std::vector<FqElt> xc(H, 0);
    xc[0] = Q.x0;
    for (int e = S.lo; e < S.hi && e < H; ++e)
      if (e >= 0) xc[e] = F.add(xc[e], S.c[e - S.lo]);
    LSeries xs = detail::ls_make(Fr, 0, std::move(xc), H);
    for (size_t i = 1; i < xpow.size(); ++i)
      xpow[i] = detail::ls_mul(xpow[i - 1], xs);
    std::vector<FqElt> yc(H, 0);
    if (H > 1) yc[1] = 1;
    LSeries y = detail::ls_make(Fr, 0, std::move(yc), H);  // y = t
    LSeries dser = detail::ls_poly_at(d, Q.x0, S);
    LSeries dinv = detail::ls_inverse(ls_strip(dser));
    push_family(xpow, y, dinv);
    return out;
  }

  const int dd = d.degree();
  if (Q.kind == PlaceKind::InfPlus || Q.kind == PlaceKind::InfMinus) {
    const int H = habs + 2 * (cb.A + std::max(cb.B, 0) + dd + 2 * g + 8);
    // x = 1/t
    std::vector<LSeries> xpow(cb.A + std::max(cb.B, 0) + 2);
    for (size_t i = 0; i < xpow.size(); ++i) {
      std::vector<FqElt> cc(H + static_cast<int>(i), 0);
      cc[0] = 1;
      xpow[i] = detail::ls_make(Fr, -static_cast<int>(i), std::move(cc), H);
    }
    // y = sign * t^{-(g+1)} sqrt(G), G(t) = t^{2g+2} f(1/t)
    std::vector<FqElt> gc(H + 2 * g + 2, 0);
    for (int i = 0; i <= f.degree(); ++i) gc[2 * g + 2 - i] = f.c[i];
    LSeries G = detail::ls_make(Fr, 0, std::move(gc), H + 2 * g + 2);
    FqElt branch =
        Q.kind == PlaceKind::InfPlus ? X.lead_sqrt() : F.neg(X.lead_sqrt());
    LSeries y = detail::ls_shift(detail::ls_sqrt(G, branch), -(g + 1));
    LSeries dser = detail::ls_poly_at_infinity(d, 1, H);
    LSeries dinv = detail::ls_inverse(ls_strip(dser));
    push_family(xpow, y, dinv);
    return out;
  }

  // InfRamified: x = 1/t^2, y = t^{-(2g+1)} sqrt(H0(t^2)), H0(u) = u^{2g+1} f(1/u)
  {
    const int H = habs + 2 * (2 * cb.A + 2 * std::max(cb.B, 0) + 2 * dd + 4 * g + 10);
    std::vector<LSeries> xpow(cb.A + std::max(cb.B, 0) + 2);
    for (size_t i = 0; i < xpow.size(); ++i) {
      std::vector<FqElt> cc(H + 2 * static_cast<int>(i), 0);
      cc[0] = 1;
      xpow[i] = detail::ls_make(Fr, -2 * static_cast<int>(i), std::move(cc), H);
    }
    int half = (H + 1) / 2 + 2 * g + 4;
    std::vector<FqElt> hc(half, 0);
    for (int i = 0; i <= f.degree(); ++i)
      if (2 * g + 1 - i < half) hc[2 * g + 1 - i] = f.c[i];
    LSeries H0 = detail::ls_make(Fr, 0, std::move(hc), half);
    LSeries SQ = detail::ls_sqrt(H0, X.lead_sqrt());
    // substitute u = t^2
    std::vector<FqElt> sc(2 * static_cast<int>(SQ.c.size()), 0);
    for (size_t i = 0; i < SQ.c.size(); ++i) sc[2 * i] = SQ.c[i];
    LSeries SQ2 = detail::ls_make(Fr, 0, std::move(sc), 2 * SQ.hi);
    LSeries y = detail::ls_shift(SQ2, -(2 * g + 1));
    LSeries dser = detail::ls_poly_at_infinity(d, 2, H);
    LSeries dinv = detail::ls_inverse(ls_strip(dser));
    push_family(xpow, y, dinv);
    return out;
  }
}

// Gaussian elimination; returns rank and, when wanted, a nullspace basis.
int rank_and_nullspace(std::vector<std::vector<FqElt>> rows, int ncols,
                       const Fq& F, std::vector<std::vector<FqElt>>* nullspace) {
  std::vector<int> pivot_col;
  size_t rr = 0;
  for (int col = 0; col < ncols && rr < rows.size(); ++col) {
    size_t sel = rr;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rr], rows[sel]);
    FqElt inv = F.inv(rows[rr][col]);
    for (int j = col; j < ncols; ++j) rows[rr][j] = F.mul(rows[rr][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rr || rows[i][col] == 0) continue;
      FqElt fazer = rows[i][col];
      for (int j = col; j < ncols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(fazer, rows[rr][j]));
    }
    pivot_col.push_back(col);
    ++rr;
  }
  int rank = static_cast<int>(rr);
  if (nullspace) {
    nullspace->clear();
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < ncols; ++free) {
      if (is_pivot[free]) continue;
      std::vector<FqElt> v(ncols, 0);
      v[free] = 1;
      for (int r = 0; r < rank; ++r)
        v[pivot_col[r]] = F.neg(rows[r][free]);
      nullspace->push_back(std::move(v));
    }
  }
  return rank;
}

struct RRSetup {
  Poly d;
  CandidateBasis cb;
  std::map<Place, int> constraints;
};

RRSetup rr_setup(const SplitCurve& X, const Divisor& D) {
  const FieldRef& Fr = X.ctx();
  const int g = X.genus();

  std::map<FqElt, int> xsupport;  // x0 -> denominator exponent
  for (auto& [p, m] : D.support()) {
    if (p.kind == PlaceKind::Affine && m > 0) {
      auto [it, fresh] = xsupport.emplace(p.x0, m);
      if (!fresh) it->second = std::max(it->second, m);
    }
  }
  Poly d(Fr, {1});
  for (auto& [x0, e] : xsupport) {
    Poly lin(Fr, {Fr->neg(x0), 1});
    for (int i = 0; i < e; ++i) d = mul(d, lin);
  }

  int extra = 0;
  if (X.model() == InfinityModel::TwoPlaces) {
    extra = std::max({0, D.mult(Place{PlaceKind::InfPlus, 0, 0}),
                      D.mult(Place{PlaceKind::InfMinus, 0, 0})});
  } else {
    extra = std::max(0, D.mult(Place{PlaceKind::InfRamified, 0, 0}));
  }
  CandidateBasis cb;
  cb.A = d.degree() + extra + g + 2 + std::max(0, D.degree()) / 2;
  cb.B = cb.A;

  std::map<Place, int> cp;
  for (auto& [p, m] : D.support()) cp[p] = m;
  for (auto& [x0, e] : xsupport) {
    (void)e;
    for (auto& p : X.places_over_x(x0)) cp.try_emplace(p, D.mult(p));
  }
  for (auto& p : X.infinity_places()) cp.try_emplace(p, D.mult(p));
  return {std::move(d), cb, std::move(cp)};
}

int rr_core(const SplitCurve& X, const Divisor& D,
            std::vector<std::vector<FqElt>>* nullspace, Poly* d_out,
            CandidateBasis* cb_out) {
  const int g = X.genus();
  if (D.degree() > 6 * g + 6)
    throw std::invalid_argument("divisor degree budget exceeded (deg D <= 6g+6)");
  for (auto& [p, m] : D.support()) {
    (void)m;
    bool odd_model = X.model() == InfinityModel::OnePlace;
    if (p.kind == PlaceKind::InfRamified && !odd_model)
      throw std::invalid_argument("InfRamified place on an even-degree model");
    if ((p.kind == PlaceKind::InfPlus || p.kind == PlaceKind::InfMinus) && odd_model)
      throw std::invalid_argument("split infinity place on an odd-degree model");
  }
  if (D.degree() < 0) {
    if (nullspace) nullspace->clear();
    return 0;
  }
  RRSetup su = rr_setup(X, D);
  const int n = su.cb.count();
  std::vector<std::vector<FqElt>> rows;
  for (auto& [Q, m] : su.constraints) {
    const int habs = -m;
    auto cs = candidate_series_at(X, su.d, su.cb, Q, habs);
    int lo_row = habs;
    for (auto& s : cs) lo_row = std::min(lo_row, s.lo);
    for (int ell = lo_row; ell < habs; ++ell) {
      std::vector<FqElt> row(n);
      bool nonzero = false;
      for (int k = 0; k < n; ++k) {
        row[k] = cs[k].coeff(ell);
        nonzero = nonzero || row[k] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  int rank = rank_and_nullspace(std::move(rows), n, *X.ctx(), nullspace);
  if (d_out) *d_out = su.d;
  if (cb_out) *cb_out = su.cb;
  return n - rank;
}

}  // namespace

int rr_dimension(const SplitCurve& X, const Divisor& D) {
  return rr_core(X, D, nullptr, nullptr, nullptr);
}

bool is_linearly_equivalent(const SplitCurve& X, const Divisor& d1,
                            const Divisor& d2) {
  if (d1.degree() != d2.degree())
    throw std::invalid_argument("degree mismatch");
  if (d1 == d2) return true;
  return rr_dimension(X, d1 - d2) == 1;
}

LinearSystemReport base_points(const SplitCurve& X, const Divisor& D) {
  const Fq& F = *X.ctx();
  std::vector<std::vector<FqElt>> null;
  Poly den;
  CandidateBasis cb;
  int h0 = rr_core(X, D, &null, &den, &cb);
  if (h0 == 0) throw std::invalid_argument("empty system has no base points");

  std::set<Place> cand;
  for (auto& [p, m] : D.support()) {
    (void)m;
    cand.insert(p);
    if (p.kind == PlaceKind::Affine)
      for (auto& q : X.places_over_x(p.x0)) cand.insert(q);
  }
  for (auto& p : X.infinity_places()) cand.insert(p);

  // common zeros of the system lie under the norm of any nonzero member
  const auto& v = null.front();
  std::vector<FqElt> ac(cb.A + 1, 0), bc(std::max(cb.B, 0) + 1, 0);
  for (int i = 0; i <= cb.A; ++i) ac[i] = v[i];
  for (int j = 0; j <= cb.B; ++j) bc[j] = v[cb.A + 1 + j];
  Poly a(X.ctx(), std::move(ac)), b(X.ctx(), std::move(bc));
  Poly norm = sub(mul(a, a), mul(mul(b, b), X.f()));
  if (!norm.is_zero()) {
    for (FqElt x0 : roots_in_field(norm)) {
      FqElt fx = eval(X.f(), x0);
      if (fx == 0) {
        cand.insert(Place{PlaceKind::Affine, x0, 0});
      } else if (auto s = F.sqrt(fx)) {
        cand.insert(Place{PlaceKind::Affine, x0, *s});
        cand.insert(Place{PlaceKind::Affine, x0, F.neg(*s)});
      }
    }
  }

  LinearSystemReport rep;
  rep.h0 = h0;
  for (auto& P : cand) {
    Divisor DP = D;
    DP.add_place(P, -1);
    if (rr_dimension(X, DP) == h0) rep.base_points.push_back(P);
  }
  return rep;
}

std::vector<Divisor> two_torsion_classes(const SplitCurve& X) {
  auto W = X.weierstrass_places();
  const int n = static_cast<int>(W.size());
  const int g = X.genus();
  if (n != 2 * g + 2)
    throw std::invalid_argument("incomplete place data: expected 2g+2 places");
  Divisor g12 = X.g12();
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Divisor> reps;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    if (std::min(mask, full ^ mask) != mask) continue;
    Divisor T;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) T.add_place(W[i], 1);
    T = T - (std::popcount(mask) / 2) * g12;
    bool dup = false;
    for (auto& R : reps)
      if (is_linearly_equivalent(X, T, R)) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(std::move(T));
  }
  return reps;
}

}  // namespace curveinv
