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

#include "curveinv/curve.hpp"

#include <stdexcept>

namespace curveinv {

HyperCurve make_curve(FieldRef F, Poly f) {
  if (f.F.get() != F.get())
    throw std::invalid_argument("curve polynomial over a different field");
  if (F->p() == 2) throw std::invalid_argument("characteristic 2 unsupported");
  if (f.degree() < 3)
    throw std::invalid_argument("curve model needs deg f >= 3");
  if (!is_squarefree(f))
    throw std::invalid_argument("singular model: f is not squarefree");
  HyperCurve c;
  c.F = std::move(F);
  c.genus = (f.degree() - 1) / 2;
  c.infinity =
      f.degree() % 2 == 0 ? InfinityModel::TwoPlaces : InfinityModel::OnePlace;
  c.f = std::move(f);
  return c;
}

Poly moebius_weight_transform(const Poly& f, const Moebius& m, int w) {
  if (f.is_zero()) return f;
  if (f.degree() > w)
    throw std::invalid_argument("transform weight below polynomial degree");
  const FieldRef& F = f.F;
  Poly num(F, {m.b, m.a});
  Poly den(F, {m.d, m.c});
  std::vector<Poly> npow(w + 1), dpow(w + 1);
  npow[0] = Poly(F, {1});
  dpow[0] = Poly(F, {1});
  for (int i = 1; i <= w; ++i) {
    npow[i] = mul(npow[i - 1], num);
    dpow[i] = mul(dpow[i - 1], den);
  }
  Poly out(F, {});
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f.c[i]) continue;
    out = add(out, scale(mul(npow[i], dpow[w - i]), f.c[i]));
  }
  return out;
}

std::optional<FqElt> proportionality_ratio(const Poly& u, const Poly& v) {
  if (u.degree() != v.degree() || u.is_zero() || v.is_zero()) return std::nullopt;
  const Fq& F = *u.F;
  FqElt r = 0;
  for (size_t i = 0; i < u.c.size(); ++i) {
    if ((u.c[i] == 0) != (v.c[i] == 0)) return std::nullopt;
    if (v.c[i] == 0) continue;
    FqElt rr = F.div(u.c[i], v.c[i]);
    if (r == 0)
      r = rr;
    else if (r != rr)
      return std::nullopt;
  }
  return r;
}

bool iso_test(const HyperCurve& c1, const HyperCurve& c2,
              std::uint32_t ext_degree) {
  if (c1.F.get() != c2.F.get())
    throw std::invalid_argument("iso_test requires the same base field");
  if (c1.genus != c2.genus) return false;
  const std::uint32_t kp = c1.F->p();
  const std::uint32_t kk = c1.F->k() * ext_degree;
  std::uint64_t qe = 1;
  for (std::uint32_t i = 0; i < kk; ++i) {
    qe *= kp;
    if (qe > 50)
      throw std::invalid_argument("iso_test scan budget exceeded (p^k <= 50)");
  }
  FieldRef E = Fq::make(kp, kk);
  FieldEmbedding emb(c1.F, E);
  Poly f1 = embed(c1.f, emb), f2 = embed(c2.f, emb);
  const int w = 2 * c1.genus + 2;
  const std::uint32_t q = E->q();

  auto try_matrix = [&](const Moebius& m) {
    Poly fm = moebius_weight_transform(f1, m, w);
    auto r = proportionality_ratio(fm, f2);
    return r && E->is_square(*r);
  };

  // canonical representatives of PGL2: first nonzero of (a, b, c, d) is 1
  for (FqElt b = 0; b < q; ++b)
    for (FqElt c = 0; c < q; ++c)
      for (FqElt d = 0; d < q; ++d) {
        Moebius m{1, b, c, d};
        if (E->sub(E->mul(m.a, m.d), E->mul(m.b, m.c)) == 0) continue;
        if (try_matrix(m)) return true;
      }
  for (FqElt c = 0; c < q; ++c)
    for (FqElt d = 0; d < q; ++d) {
      Moebius m{0, 1, c, d};
      if (E->neg(E->mul(m.b, m.c)) == 0) continue;
      if (try_matrix(m)) return true;
    }
  return false;
}

}  // namespace curveinv
