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

#include "curveinv/involution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace curveinv {

namespace {

bool is_scalar(const Moebius& m) { return m.b == 0 && m.c == 0 && m.a == m.d; }

std::uint64_t field_size(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  return q;
}

}  // namespace

Involution::Involution(HyperCurve host, std::uint32_t ext_degree, Moebius m,
                       FqElt e)
    : host_(std::move(host)), ext_degree_(ext_degree), m_(m), e_(e) {
  E_ = Fq::make(host_.F->p(), host_.F->k() * ext_degree);
  const Fq& E = *E_;
  const int g = host_.genus;

  // normalize: first nonzero of (a, b, c, d) scaled to 1, e by t^{g+1}
  FqElt first = m_.a ? m_.a : m_.b ? m_.b : m_.c ? m_.c : m_.d;
  if (first == 0) throw std::invalid_argument("zero matrix");
  FqElt t = E.inv(first);
  m_.a = E.mul(m_.a, t);
  m_.b = E.mul(m_.b, t);
  m_.c = E.mul(m_.c, t);
  m_.d = E.mul(m_.d, t);
  e_ = E.mul(e_, E.pow(t, g + 1));

  FqElt det = E.sub(E.mul(m_.a, m_.d), E.mul(m_.b, m_.c));
  if (det == 0) throw std::invalid_argument("moebius matrix is singular");

  FieldEmbedding emb(host_.F, E_);
  Poly fe = embed(host_.f, emb);
  Poly fm = moebius_weight_transform(fe, m_, 2 * g + 2);
  if (!(scale(fe, E.mul(e_, e_)) == fm))
    throw std::invalid_argument("substitution identity fails: not a curve map");

  if (is_scalar(m_)) {
    // normalized scalar matrix is the identity; the map is (x, y) -> (x, e y)
    if (e_ == E.one())
      throw std::invalid_argument("identity map is not an involution");
    if (e_ != E.neg(E.one()))
      throw std::invalid_argument("map does not have order 2");
  } else {
    if (E.add(m_.a, m_.d) != 0)
      throw std::invalid_argument("map does not have order 2");
    FqElt mu = E.neg(det);  // m^2 = mu * I
    if (E.mul(e_, e_) != E.pow(mu, g + 1))
      throw std::invalid_argument("map does not have order 2");
  }
}

bool Involution::is_canonical() const {
  return is_scalar(m_) && e_ == E_->neg(E_->one());
}

std::vector<FqElt> Involution::action_sample() const {
  const Fq& E = *E_;
  const std::uint32_t n = 2 * host_.genus + 4;
  std::vector<FqElt> sig;
  sig.reserve(n + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    FqElt x = i % E.q();
    FqElt den = E.add(E.mul(m_.c, x), m_.d);
    if (den == 0) {
      sig.push_back(E.q());  // maps to infinity
    } else {
      sig.push_back(E.div(E.add(E.mul(m_.a, x), m_.b), den));
    }
  }
  sig.push_back(e_);
  return sig;
}

bool Involution::operator==(const Involution& o) const {
  return host_.same_curve(o.host_) && E_.get() == o.E_.get() && m_ == o.m_ &&
         e_ == o.e_;
}

Involution canonical_involution(const HyperCurve& c) {
  if (c.genus < 1)
    throw std::invalid_argument("canonical involution needs genus >= 1");
  return Involution(c, 1, Moebius{1, 0, 0, 1}, c.F->neg(c.F->one()));
}

std::vector<Involution> find_involutions(const HyperCurve& c,
                                         std::uint32_t ext_degree,
                                         bool allow_genus_one) {
  if (c.genus < 1) throw std::invalid_argument("involution search needs genus >= 1");
  if (c.genus == 1 && !allow_genus_one)
    throw std::invalid_argument(
        "genus-1 hosts rejected by default: involutions depend on the model");
  const std::uint32_t kk = c.F->k() * ext_degree;
  if (field_size(c.F->p(), kk) > 50)
    throw std::invalid_argument("involution scan budget exceeded (p^k <= 50)");
  FieldRef E = Fq::make(c.F->p(), kk);
  const Fq& F = *E;
  FieldEmbedding emb(c.F, E);
  Poly fe = embed(c.f, emb);
  const int g = c.genus;
  const int w = 2 * g + 2;
  const std::uint32_t q = F.q();

  std::vector<Involution> found;
  auto try_matrix = [&](const Moebius& m, FqElt det) {
    Poly fm = moebius_weight_transform(fe, m, w);
    auto ratio = proportionality_ratio(fm, fe);
    if (!ratio) return;
    FqElt mu = F.neg(det);
    if (*ratio != F.pow(mu, g + 1)) return;
    auto root = F.sqrt(*ratio);
    if (!root) return;
    found.emplace_back(c, ext_degree, m, *root);
    found.emplace_back(c, ext_degree, m, F.neg(*root));
  };

  // trace-zero projective classes: (1, b; c, -1) and (0, 1; c, 0)
  for (FqElt b = 0; b < q; ++b)
    for (FqElt cc = 0; cc < q; ++cc) {
      Moebius m{1, b, cc, F.neg(F.one())};
      FqElt det = F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
      if (det == 0) continue;
      try_matrix(m, det);
    }
  for (FqElt cc = 1; cc < q; ++cc) {
    Moebius m{0, 1, cc, 0};
    try_matrix(m, F.neg(cc));
  }

  std::sort(found.begin(), found.end(), [](const Involution& x, const Involution& y) {
    return std::tuple(x.moebius().a, x.moebius().b, x.moebius().c, x.moebius().d,
                      x.y_factor()) <
           std::tuple(y.moebius().a, y.moebius().b, y.moebius().c, y.moebius().d,
                      y.y_factor());
  });

  std::vector<Involution> result;
  result.push_back(Involution(c, ext_degree, Moebius{1, 0, 0, 1},
                              F.neg(F.one())));  // delta is always present
  std::vector<std::vector<FqElt>> seen{result[0].action_sample()};
  for (auto& s : found) {
    auto sig = s.action_sample();
    if (std::find(seen.begin(), seen.end(), sig) == seen.end()) {
      seen.push_back(std::move(sig));
      result.push_back(std::move(s));
    }
  }
  return result;
}

RamificationReport fixed_points_geometric(const Involution& s) {
  const HyperCurve& c = s.host();
  const int g = c.genus;
  const std::uint32_t k2 = 2 * s.ext_degree();
  FieldRef E2 = Fq::make(c.F->p(), c.F->k() * k2);
  const Fq& F = *E2;
  FieldEmbedding emb_base(c.F, E2);
  FieldEmbedding emb_e(s.field(), E2);
  Poly fe = embed(c.f, emb_base);
  Moebius m{emb_e(s.moebius().a), emb_e(s.moebius().b), emb_e(s.moebius().c),
            emb_e(s.moebius().d)};
  FqElt e = emb_e(s.y_factor());

  RamificationReport rep;
  rep.extension_degree_used = k2;
  rep.coordinate_field = E2;

  if (m.b == 0 && m.c == 0 && m.a == m.d) {
    // canonical involution: every Weierstrass place is fixed
    auto roots = roots_in_field(fe);
    for (FqElt x0 : roots)
      rep.affine_fixed.push_back({true, x0, true, 0});
    for (int i = static_cast<int>(roots.size()); i < c.f.degree(); ++i)
      rep.affine_fixed.push_back({false, 0, true, 0});
    rep.infinity_fixed = c.infinity == InfinityModel::OnePlace ? 1 : 0;
    rep.r = c.f.degree() + rep.infinity_fixed;
    return rep;
  }

  std::vector<FqElt> fixed_x;
  if (m.c == 0) {
    fixed_x.push_back(F.div(m.b, F.sub(m.d, m.a)));
    if (c.infinity == InfinityModel::TwoPlaces) {
      FqElt mult = F.div(e, F.pow(m.a, g + 1));
      if (mult == F.one())
        rep.infinity_fixed = 2;
      else if (mult == F.neg(F.one()))
        rep.infinity_fixed = 0;
      else
        throw std::logic_error("infinity multiplier is not a sign");
    } else {
      rep.infinity_fixed = 1;
    }
  } else {
    FqElt A = m.c, B = F.sub(m.d, m.a), C = F.neg(m.b);
    FqElt disc = F.sub(F.mul(B, B), F.mul(F.from_int(4), F.mul(A, C)));
    auto sq = F.sqrt(disc);
    if (!sq) throw std::logic_error("fixed points escaped the quadratic extension");
    FqElt inv2a = F.inv(F.add(A, A));
    fixed_x.push_back(F.mul(F.add(F.neg(B), *sq), inv2a));
    fixed_x.push_back(F.mul(F.sub(F.neg(B), *sq), inv2a));
    if (fixed_x[0] == fixed_x[1]) throw std::logic_error("parabolic matrix of order 2");
    rep.infinity_fixed = 0;
  }

  for (FqElt x0 : fixed_x) {
    FqElt fx = eval(fe, x0);
    if (fx == 0) {
      rep.affine_fixed.push_back({true, x0, true, 0});
      continue;
    }
    FqElt t = F.pow(F.add(F.mul(m.c, x0), m.d), g + 1);
    if (t == e) {
      rep.affine_fixed.push_back({true, x0, false, 0});
      rep.affine_fixed.push_back({true, x0, false, 1});
    } else if (t != F.neg(e)) {
      throw std::logic_error("y-condition is not a sign");
    }
  }
  rep.r = static_cast<int>(rep.affine_fixed.size()) + rep.infinity_fixed;
  if (rep.r % 2 != 0) throw std::logic_error("inconsistent fixed-point count");
  return rep;
}

int quotient_genus(const Involution& s) {
  int r = fixed_points_geometric(s).r;
  int num = 2 * s.host().genus + 2 - r;
  if (num % 4 != 0 || num < 0)
    throw std::logic_error("inconsistent fixed-point count");
  return num / 4;
}

std::optional<Involution> compose(const Involution& s, const Involution& t,
                                  std::string* why) {
  if (!s.host().same_curve(t.host()))
    throw std::invalid_argument("compose requires the same host curve");
  const HyperCurve& c = s.host();
  const int g = c.genus;
  std::uint32_t k = std::lcm(s.ext_degree(), t.ext_degree());
  FieldRef E = Fq::make(c.F->p(), c.F->k() * k);
  const Fq& F = *E;
  FieldEmbedding es(s.field(), E), et(t.field(), E);
  Moebius m1{es(s.moebius().a), es(s.moebius().b), es(s.moebius().c),
             es(s.moebius().d)};
  Moebius m2{et(t.moebius().a), et(t.moebius().b), et(t.moebius().c),
             et(t.moebius().d)};
  Moebius m3{F.add(F.mul(m1.a, m2.a), F.mul(m1.b, m2.c)),
             F.add(F.mul(m1.a, m2.b), F.mul(m1.b, m2.d)),
             F.add(F.mul(m1.c, m2.a), F.mul(m1.d, m2.c)),
             F.add(F.mul(m1.c, m2.b), F.mul(m1.d, m2.d))};
  FqElt e3 = F.mul(es(s.y_factor()), et(t.y_factor()));

  if (m3.b == 0 && m3.c == 0 && m3.a == m3.d) {
    FqElt reduced = F.div(e3, F.pow(m3.a, g + 1));
    if (reduced == F.one()) {
      if (why) *why = "composite is the identity, not an involution";
      return std::nullopt;
    }
    if (reduced != F.neg(F.one()))
      throw std::logic_error("scalar composite with non-sign y-factor");
    return Involution(c, k, Moebius{1, 0, 0, 1}, F.neg(F.one()));
  }
  FqElt det = F.sub(F.mul(m3.a, m3.d), F.mul(m3.b, m3.c));
  if (F.add(m3.a, m3.d) != 0 ||
      F.mul(e3, e3) != F.pow(F.neg(det), g + 1)) {
    if (why) *why = "composite has order > 2";
    return std::nullopt;
  }
  return Involution(c, k, m3, e3);
}

std::optional<QuotientNormalForm> quotient_curve_normal_form(const Involution& s) {
  const HyperCurve& c = s.host();
  if (s.ext_degree() != 1) return std::nullopt;
  const Fq& F = *c.F;
  const Moebius& m = s.moebius();
  if (m.b == 0 && m.c == 0 && m.a == m.d) return std::nullopt;  // canonical
  const int g = c.genus;
  const int w = 2 * g + 2;

  FqElt alpha, det_t;
  Moebius T, adjT;
  bool beta_infinite = (m.c == 0);
  if (beta_infinite) {
    alpha = F.div(m.b, F.sub(m.d, m.a));
    T = Moebius{1, F.neg(alpha), 0, 1};
    adjT = Moebius{1, alpha, 0, 1};
    det_t = 1;
    if (c.infinity != InfinityModel::TwoPlaces)
      throw std::logic_error("affine involution on an odd-degree model");
  } else {
    FqElt B = F.sub(m.d, m.a);
    FqElt disc = F.add(F.mul(B, B),
                       F.mul(F.from_int(4), F.mul(m.b, m.c)));
    auto sq = F.sqrt(disc);
    if (!sq) return std::nullopt;  // fixed points not rational over the base
    FqElt inv2c = F.inv(F.add(m.c, m.c));
    alpha = F.mul(F.add(F.neg(B), *sq), inv2c);
    FqElt beta = F.mul(F.sub(F.neg(B), *sq), inv2c);
    T = Moebius{1, F.neg(alpha), 1, F.neg(beta)};
    adjT = Moebius{F.neg(beta), alpha, F.neg(F.one()), 1};
    det_t = F.sub(alpha, beta);
    if (eval(c.f, beta) == 0)
      throw std::logic_error("involution fixes a branch point");
  }
  if (eval(c.f, alpha) == 0)
    throw std::logic_error("involution fixes a branch point");

  auto matmul = [&](const Moebius& x, const Moebius& y) {
    return Moebius{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
                   F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
                   F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
                   F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
  };
  Moebius mp = matmul(matmul(T, m), adjT);
  if (mp.b != 0 || mp.c != 0 || mp.a != F.neg(mp.d))
    throw std::logic_error("conjugation did not reach the x -> -x normal form");
  // change of model is the pair (T, det(T)^{g+1}); its inverse is (adj T, 1)
  FqElt nu = mp.d;
  FqElt ep = F.div(F.mul(s.y_factor(), F.pow(det_t, g + 1)), F.pow(nu, g + 1));
  if (ep != F.one() && ep != F.neg(F.one()))
    throw std::logic_error("conjugated y-factor is not a sign");

  Poly big = moebius_weight_transform(c.f, adjT, w);
  if (big.degree() != w)
    throw std::logic_error("conjugated model dropped degree");
  std::vector<FqElt> f0c(g + 2, 0);
  for (int i = 0; i <= big.degree(); ++i) {
    if (i % 2 != 0) {
      if (big.c[i] != 0)
        throw std::logic_error("conjugated model is not even");
    } else {
      f0c[i / 2] = big.c[i];
    }
  }
  Poly f0(c.F, std::move(f0c));

  QuotientNormalForm out;
  out.f0 = f0;
  out.y_fixed = (ep == F.one());
  Poly quot = out.y_fixed ? f0 : mul(Poly(c.F, {0, 1}), f0);
  out.quotient = make_curve(c.F, quot);
  return out;
}

}  // namespace curveinv
