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

#include "curveinv/divisor.hpp"

#include <algorithm>
#include <stdexcept>

namespace curveinv {

SplitCurve::SplitCurve(HyperCurve c, FieldRef ctx)
    : base_(std::move(c)), ctx_(std::move(ctx)) {
  FieldEmbedding emb(base_.F, ctx_);
  f_ = embed(base_.f, emb);
  auto s = ctx_->sqrt(f_.lead());
  if (!s)
    throw std::invalid_argument(
        "context field lacks sqrt(lead f); infinity places unlabeled");
  lead_sqrt_ = *s;
  fully_split_ =
      static_cast<int>(roots_in_field(f_).size()) == f_.degree();
}

SplitCurve SplitCurve::make(const HyperCurve& c, std::uint32_t max_q) {
  const std::uint32_t p = c.F->p();
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < c.F->k(); ++i) q *= p;
  for (std::uint32_t m = 1;; ++m) {
    std::uint64_t qm = 1;
    bool over = false;
    for (std::uint32_t i = 0; i < c.F->k() * m; ++i) {
      qm *= p;
      if (qm > max_q) {
        over = true;
        break;
      }
    }
    if (over) throw std::invalid_argument("splitting budget exceeded");
    FieldRef ctx = Fq::make(p, c.F->k() * m);
    FieldEmbedding emb(c.F, ctx);
    Poly fe = embed(c.f, emb);
    if (!ctx->is_square(fe.lead())) continue;
    if (static_cast<int>(roots_in_field(fe).size()) == fe.degree())
      return SplitCurve(c, ctx);
  }
}

SplitCurve SplitCurve::make_with_degree(const HyperCurve& c, std::uint32_t m) {
  FieldRef ctx = Fq::make(c.F->p(), c.F->k() * m);
  return SplitCurve(c, ctx);
}

Place SplitCurve::affine(FqElt x0, FqElt y0) const {
  const Fq& F = *ctx_;
  if (F.mul(y0, y0) != eval(f_, x0))
    throw std::invalid_argument("point does not satisfy y^2 = f(x)");
  return Place{PlaceKind::Affine, x0, y0};
}

std::vector<Place> SplitCurve::places_over_x(FqElt x0) const {
  const Fq& F = *ctx_;
  FqElt v = eval(f_, x0);
  if (v == 0) return {Place{PlaceKind::Affine, x0, 0}};
  auto s = F.sqrt(v);
  if (!s)
    throw std::invalid_argument("fiber is not split over the context field");
  return {Place{PlaceKind::Affine, x0, *s}, Place{PlaceKind::Affine, x0, F.neg(*s)}};
}

std::vector<Place> SplitCurve::infinity_places() const {
  if (base_.infinity == InfinityModel::OnePlace)
    return {Place{PlaceKind::InfRamified, 0, 0}};
  return {Place{PlaceKind::InfPlus, 0, 0}, Place{PlaceKind::InfMinus, 0, 0}};
}

std::vector<Place> SplitCurve::weierstrass_places() const {
  if (!fully_split_)
    throw std::invalid_argument("incomplete place data: f does not split");
  std::vector<Place> w;
  for (FqElt x0 : roots_in_field(f_)) w.push_back(Place{PlaceKind::Affine, x0, 0});
  if (base_.infinity == InfinityModel::OnePlace)
    w.push_back(Place{PlaceKind::InfRamified, 0, 0});
  std::sort(w.begin(), w.end());
  return w;
}

Divisor SplitCurve::g12() const {
  Divisor d;
  if (base_.infinity == InfinityModel::OnePlace) {
    d.add_place(Place{PlaceKind::InfRamified, 0, 0}, 2);
  } else {
    d.add_place(Place{PlaceKind::InfPlus, 0, 0}, 1);
    d.add_place(Place{PlaceKind::InfMinus, 0, 0}, 1);
  }
  return d;
}

Divisor SplitCurve::canonical() const { return (genus() - 1) * g12(); }

}  // namespace curveinv
