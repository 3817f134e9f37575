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

#include "curveinv/poly.hpp"

#include <cassert>
#include <stdexcept>

namespace curveinv {

namespace {
void trim(std::vector<FqElt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
void check_same_field(const Poly& a, const Poly& b) {
  if (a.F.get() != b.F.get())
    throw std::invalid_argument("polynomials over different fields");
}
}  // namespace

Poly::Poly(FieldRef field, std::vector<FqElt> coeffs)
    : F(std::move(field)), c(std::move(coeffs)) {
  for (auto& x : c)
    if (x >= F->q()) throw std::invalid_argument("coefficient out of range");
  trim(c);
}

Poly poly_from_ints(const FieldRef& F, const std::vector<std::uint64_t>& ints) {
  std::vector<FqElt> c;
  c.reserve(ints.size());
  for (auto v : ints) c.push_back(F->from_int(v));
  return Poly(F, std::move(c));
}

Poly add(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  std::vector<FqElt> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.F->add(a.coeff(i), b.coeff(i));
  trim(c);
  return Poly(a.F, std::move(c));
}

Poly neg(const Poly& a) {
  std::vector<FqElt> c(a.c);
  for (auto& x : c) x = a.F->neg(x);
  return Poly(a.F, std::move(c));
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.F, {});
  std::vector<FqElt> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = a.F->add(c[i + j], a.F->mul(a.c[i], b.c[j]));
  }
  return Poly(a.F, std::move(c));
}

Poly scale(const Poly& a, FqElt s) {
  std::vector<FqElt> c(a.c);
  for (auto& x : c) x = a.F->mul(x, s);
  trim(c);
  return Poly(a.F, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<FqElt> r(a.c), q;
  int db = b.degree();
  if (a.degree() >= db) q.assign(a.degree() - db + 1, 0);
  FqElt lead_inv = a.F->inv(b.lead());
  while (static_cast<int>(r.size()) - 1 >= db) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    FqElt f = a.F->mul(r.back(), lead_inv);
    size_t off = r.size() - 1 - db;
    q[off] = f;
    for (int j = 0; j <= db; ++j)
      r[off + j] = a.F->sub(r[off + j], a.F->mul(f, b.c[j]));
    trim(r);
  }
  trim(q);
  return {Poly(a.F, std::move(q)), Poly(a.F, std::move(r))};
}

Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.F->inv(a.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return make_monic(x);
}

Poly derivative(const Poly& a) {
  if (a.degree() < 1) return Poly(a.F, {});
  std::vector<FqElt> c(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    c[i - 1] = a.F->mul(a.F->from_int(i), a.c[i]);
  trim(c);
  return Poly(a.F, std::move(c));
}

FqElt eval(const Poly& a, FqElt x) {
  FqElt v = 0;
  for (size_t i = a.c.size(); i-- > 0;) v = a.F->add(a.F->mul(v, x), a.c[i]);
  return v;
}

FqElt eval_embedded(const Poly& a, const FieldEmbedding& emb, FqElt x) {
  const Fq& E = *emb.into();
  FqElt v = 0;
  for (size_t i = a.c.size(); i-- > 0;) v = E.add(E.mul(v, x), emb(a.c[i]));
  return v;
}

Poly embed(const Poly& a, const FieldEmbedding& emb) {
  std::vector<FqElt> c(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = emb(a.c[i]);
  return Poly(emb.into(), std::move(c));
}

FqElt resultant(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Fq& F = *a.F;
  // Euclidean resultant: res(a,b) = lead(b)^{deg a - deg r} * (-1)^{da db} res(b, r)
  if (a.is_zero() || b.is_zero()) return 0;
  Poly x = a, y = b;
  FqElt res = 1;
  while (true) {
    if (y.degree() == 0) {
      res = F.mul(res, F.pow(y.lead(), x.degree()));
      return res;
    }
    Poly r = divmod(x, y).second;
    if (r.is_zero()) return 0;
    int dx = x.degree(), dy = y.degree(), dr = r.degree();
    res = F.mul(res, F.pow(y.lead(), dx - dr));
    if ((dx % 2) && (dy % 2)) res = F.neg(res);
    x = y;
    y = r;
  }
}

FqElt discriminant(const Poly& a) {
  if (a.degree() < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  const Fq& F = *a.F;
  Poly d = derivative(a);
  if (d.is_zero()) return 0;
  FqElt r = resultant(a, d);
  int n = a.degree();
  FqElt v = F.div(r, a.lead());
  if ((n * (n - 1) / 2) % 2) v = F.neg(v);
  return v;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero())
    throw std::invalid_argument("zero polynomial has no squarefree status");
  if (f.degree() == 0) return true;
  Poly d = derivative(f);
  if (d.is_zero()) return false;  // f is a p-th power times a constant
  return gcd(f, d).degree() == 0;
}

Poly find_irreducible(std::uint32_t p, std::uint32_t k) {
  // Fq::make already builds the lexicographically smallest one.
  auto E = Fq::make(p, k);
  auto F = Fq::make(p, 1);
  std::vector<FqElt> c(E->modulus().begin(), E->modulus().end());
  return Poly(F, std::move(c));
}

RootsInExtension roots_in_extension(const Poly& f, std::uint32_t k) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has every root");
  if (f.F->k() != 1)
    throw std::invalid_argument("roots_in_extension expects a prime base field");
  FieldRef E = Fq::make(f.F->p(), k);  // enforces the p^k <= 10^6 budget
  FieldEmbedding emb(f.F, E);
  std::vector<FqElt> roots;
  for (FqElt x = 0; x < E->q(); ++x)
    if (eval_embedded(f, emb, x) == 0) roots.push_back(x);
  return {E, std::move(roots)};
}

std::vector<FqElt> roots_in_field(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has every root");
  std::vector<FqElt> roots;
  for (FqElt x = 0; x < f.F->q(); ++x)
    if (eval(f, x) == 0) roots.push_back(x);
  return roots;
}

std::string to_string(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string s;
  for (size_t i = f.c.size(); i-- > 0;) {
    if (!f.c[i]) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || f.c[i] != 1) s += std::to_string(f.c[i]);
    if (i > 0) {
      if (f.c[i] != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace curveinv
