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

#include "curveinv/census.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "curveinv/riemann_roch.hpp"

namespace curveinv {
namespace census {

namespace {

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t k = 0, v = q;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) throw std::invalid_argument("q is not a prime power");
    return {p, k};
  }
  throw std::invalid_argument("q must be at least 2");
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// dense coefficient vector of fixed length <-> integer index, base q
std::uint64_t encode(const std::vector<FqElt>& c, std::uint32_t q, int len) {
  std::uint64_t v = 0;
  for (int i = len; i-- > 0;) v = v * q + (i < static_cast<int>(c.size()) ? c[i] : 0);
  return v;
}

std::vector<FqElt> decode(std::uint64_t v, std::uint32_t q, int len) {
  std::vector<FqElt> c(len);
  for (int i = 0; i < len; ++i) {
    c[i] = static_cast<FqElt>(v % q);
    v /= q;
  }
  return c;
}

bool lex_less(const std::vector<FqElt>& a, const std::vector<FqElt>& b, int len) {
  for (int i = 0; i < len; ++i) {
    FqElt x = i < static_cast<int>(a.size()) ? a[i] : 0;
    FqElt y = i < static_cast<int>(b.size()) ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

// the weight-w action of one matrix as a linear map on coefficient vectors
struct TransformMatrix {
  std::vector<std::vector<FqElt>> col;  // col[i] = image of x^i, length len
};

std::vector<Moebius> all_pgl2(const Fq& F) {
  std::vector<Moebius> ms;
  const std::uint32_t q = F.q();
  for (FqElt b = 0; b < q; ++b)
    for (FqElt c = 0; c < q; ++c)
      for (FqElt d = 0; d < q; ++d) {
        Moebius m{1, b, c, d};
        if (F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)) != 0) ms.push_back(m);
      }
  for (FqElt c = 1; c < q; ++c)
    for (FqElt d = 0; d < q; ++d) ms.push_back(Moebius{0, 1, c, d});
  return ms;
}

TransformMatrix build_transform(const Fq& F, const Moebius& m, int w, int len) {
  FieldRef Fr = Fq::make(F.p(), F.k());
  TransformMatrix t;
  t.col.resize(len);
  Poly num(Fr, {m.b, m.a}), den(Fr, {m.d, m.c});
  std::vector<Poly> npow(w + 1), dpow(w + 1);
  npow[0] = Poly(Fr, {1});
  dpow[0] = Poly(Fr, {1});
  for (int i = 1; i <= w; ++i) {
    npow[i] = mul(npow[i - 1], num);
    dpow[i] = mul(dpow[i - 1], den);
  }
  for (int i = 0; i < len; ++i) {
    std::vector<FqElt> v(len, 0);
    if (i <= w) {
      Poly img = mul(npow[i], dpow[w - i]);
      for (int j = 0; j <= img.degree() && j < len; ++j) v[j] = img.c[j];
    }
    t.col[i] = std::move(v);
  }
  return t;
}

std::vector<FqElt> apply_transform(const Fq& F, const TransformMatrix& t,
                                   const std::vector<FqElt>& f, int len) {
  std::vector<FqElt> out(len, 0);
  for (int i = 0; i < len && i < static_cast<int>(f.size()); ++i) {
    if (!f[i]) continue;
    const auto& cl = t.col[i];
    for (int j = 0; j < len; ++j)
      if (cl[j]) out[j] = F.add(out[j], F.mul(f[i], cl[j]));
  }
  return out;
}

int vec_degree(const std::vector<FqElt>& c) {
  for (int i = static_cast<int>(c.size()); i-- > 0;)
    if (c[i]) return i;
  return -1;
}

void check_budget(int genus, std::uint32_t q) {
  if (genus < 1 || genus > 3)
    throw std::invalid_argument("census budget: genus must be 1, 2 or 3");
  if (q % 2 == 0) throw std::invalid_argument("census needs odd q");
  std::uint32_t cap = genus <= 2 ? 13 : 7;
  if (q > cap) throw std::invalid_argument("census budget exceeded for this genus");
}

std::vector<std::vector<FqElt>> class_reps(int genus, std::uint32_t q) {
  check_budget(genus, q);
  auto [p, k] = factor_prime_power(q);
  FieldRef F = Fq::make(p, k);
  const int w = 2 * genus + 2;
  const int len = w + 1;
  const std::uint64_t space = ipow(q, len);

  std::vector<TransformMatrix> mats;
  for (auto& m : all_pgl2(*F)) mats.push_back(build_transform(*F, m, w, len));
  std::vector<FqElt> square_scalars;
  for (FqElt s = 1; s < q; ++s)
    if (F->is_square(s) && s != 0) square_scalars.push_back(s);

  std::vector<std::uint8_t> visited(space, 0);
  std::vector<std::vector<FqElt>> reps;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    if (visited[idx]) continue;
    std::vector<FqElt> f = decode(idx, q, len);
    int deg = vec_degree(f);
    if (deg != 2 * genus + 1 && deg != 2 * genus + 2) continue;
    Poly fp(F, f);
    if (!is_squarefree(fp)) continue;
    std::vector<FqElt> best = f;
    for (auto& t : mats) {
      std::vector<FqElt> g = apply_transform(*F, t, f, len);
      for (FqElt s : square_scalars) {
        std::vector<FqElt> h(len);
        for (int i = 0; i < len; ++i) h[i] = F->mul(g[i], s);
        visited[encode(h, q, len)] = 1;
        if (lex_less(h, best, len)) best = h;
      }
    }
    while (!best.empty() && best.back() == 0) best.pop_back();
    reps.push_back(std::move(best));
  }
  std::sort(reps.begin(), reps.end(),
            [len](const auto& a, const auto& b) { return lex_less(a, b, len); });
  return reps;
}

}  // namespace

std::vector<HyperCurve> enumerate_hyperelliptic(int genus, std::uint32_t q) {
  auto [p, k] = factor_prime_power(q);
  FieldRef F = Fq::make(p, k);
  std::vector<HyperCurve> out;
  for (auto& rep : class_reps(genus, q)) out.push_back(make_curve(F, Poly(F, rep)));
  return out;
}

CensusReport survey_involutions(int genus, std::uint32_t q) {
  CensusReport rep;
  rep.q = q;
  rep.genus = genus;
  auto curves = enumerate_hyperelliptic(genus, q);
  rep.total_classes = static_cast<long>(curves.size());
  for (auto& c : curves) {
    auto invs = find_involutions(c, 1, /*allow_genus_one=*/true);
    std::set<int> genera;
    for (auto& s : invs) {
      int gq = quotient_genus(s);
      genera.insert(gq);
      if (!s.is_canonical()) {
        ++rep.noncanonical_involutions;
        if (genus >= 2 &&
            !(genus == 2 * gq - 1 || genus == 2 * gq || genus == 2 * gq + 1)) {
          rep.window_violations.push_back(
              "f=" + to_string(c.f) + " quotient genus " + std::to_string(gq));
        }
      }
    }
    for (int gq : genera) ++rep.involution_distribution[gq];
  }
  return rep;
}

ComplementReport verify_complement_corpus(int genus, std::uint32_t q) {
  ComplementReport rep;
  auto curves = enumerate_hyperelliptic(genus, q);
  rep.classes = static_cast<long>(curves.size());
  const int pi = genus;
  for (auto& c : curves) {
    auto invs = find_involutions(c, 1, /*allow_genus_one=*/true);
    Involution delta = canonical_involution(c);
    for (auto& s : invs) {
      // Hurwitz bookkeeping for every involution, canonical included
      auto fp = fixed_points_geometric(s);
      int gq = quotient_genus(s);
      ++rep.involutions_checked;
      if (fp.r != 2 * (pi - 1) - 4 * (gq - 1)) {
        ++rep.failures;
        rep.witnesses.push_back("hurwitz: f=" + to_string(c.f));
        continue;
      }
      if (auto nf = quotient_curve_normal_form(s)) {
        ++rep.normal_form_checks;
        if (nf->quotient.genus != gq) {
          ++rep.failures;
          rep.witnesses.push_back("normal form genus: f=" + to_string(c.f));
        }
      }
      if (s.is_canonical()) continue;
      std::string why;
      auto ds = compose(delta, s, &why);
      if (!ds) {
        ++rep.failures;
        rep.witnesses.push_back("compose failed (" + why + "): f=" + to_string(c.f));
        continue;
      }
      if (quotient_genus(*ds) != pi - gq) {
        ++rep.failures;
        rep.witnesses.push_back("complement: f=" + to_string(c.f) + " g=" +
                                std::to_string(gq));
      }
    }
  }
  return rep;
}

DimensionEstimate family_parameter_count(const std::string& family_tag, int pi) {
  if (pi < 2) throw std::invalid_argument("family parameter count needs pi >= 2");
  const bool even_family = family_tag == "y^2=f(x^2)" || family_tag == "y2=f(x2)";
  const bool odd_family = family_tag == "y^2=x*f(x^2)" || family_tag == "y2=x*f(x2)";
  if (!even_family && !odd_family)
    throw std::invalid_argument("unknown family_tag: " + family_tag);

  // sample field large enough to stay clear of small-characteristic artifacts
  const std::uint32_t sample_q = 29;
  FieldRef F = Fq::make(sample_q, 1);
  const int deg_f = even_family ? pi + 1 : pi;

  // deterministic sample member: f = u^{deg} + u + c, smallest viable c != 0
  Poly f(F, {});
  for (FqElt c0 = 1; c0 < sample_q; ++c0) {
    std::vector<FqElt> cc(deg_f + 1, 0);
    cc[0] = c0;
    if (deg_f >= 1) cc[1] = 1;
    cc[deg_f] = 1;
    Poly cand(F, cc);
    if (is_squarefree(cand) && eval(cand, 0) != 0) {
      f = cand;
      break;
    }
  }
  if (f.is_zero()) throw std::logic_error("no sample member found");

  // the sample host curve
  std::vector<FqElt> host(even_family ? 2 * deg_f + 1 : 2 * deg_f + 2, 0);
  for (int i = 0; i <= deg_f; ++i) {
    if (even_family)
      host[2 * i] = f.c[i];
    else
      host[2 * i + 1] = f.c[i];
  }
  HyperCurve sample = make_curve(F, Poly(F, host));

  DimensionEstimate est;
  est.family_tag = family_tag;
  est.pi = pi;
  est.raw = deg_f;  // monic with f(0) != 0: coefficients c_0..c_{deg-1}
  est.group_dim = 1;  // scalings x -> t x (y rescaled to keep the model monic)
  est.normalization =
      "f monic of degree " + std::to_string(deg_f) +
      ", f(0) != 0; residual group: x -> t x with matching y-scaling "
      "(1-dimensional; x -> 1/x and y -> -y contribute dimension 0)";

  // brute-force stabilizer of the sample member inside the scaling group:
  // t fixes f iff c_j t^{2j - 2 deg} = c_j for every j
  long stab_count = 0;
  for (FqElt t = 1; t < sample_q; ++t) {
    bool fix = true;
    for (int j = 0; j <= deg_f && fix; ++j) {
      if (!f.c[j]) continue;
      if (F->pow(t, 2 * j - 2 * deg_f) != 1) fix = false;
    }
    if (fix) ++stab_count;
  }
  est.stabilizer_dim = stab_count == sample_q - 1 ? 1 : 0;
  est.estimated_dim = est.raw - (est.group_dim - est.stabilizer_dim);

  // does the sample member carry a non-canonical involution?
  if (sample_q <= 50) {
    auto invs = find_involutions(sample, 1, /*allow_genus_one=*/true);
    est.sample_has_noncanonical_involution = invs.size() > 1;
  }
  if (even_family) {
    est.note = "hosts x -> -x with y fixed or negated; realizes the window";
  } else {
    est.note =
        "x -> -x lifts only to order 4 (e^2 = -1); generic member has no "
        "non-canonical involution, the family sits one dimension below pi";
  }
  return est;
}

namespace {

// pinned elliptic curves y^2 = x^3 + a x + b with point counts near q+1
Poly pinned_elliptic(const FieldRef& F) {
  switch (F->q()) {
    case 5:
      return poly_from_ints(F, {2, 3, 0, 1});
    case 7:
      return poly_from_ints(F, {0, 1, 0, 1});
    case 11:
      return poly_from_ints(F, {6, 1, 0, 1});
    default: {
      for (std::uint64_t b = 1; b < F->q(); ++b) {
        Poly f = poly_from_ints(F, {b, 1, 0, 1});
        if (is_squarefree(f)) return f;
      }
      throw std::logic_error("no elliptic sample");
    }
  }
}

Poly pinned_genus2(const FieldRef& F) {
  for (std::uint64_t c = 1; c < F->q(); ++c) {
    Poly f = poly_from_ints(F, {c, 1, 0, 0, 0, 1});  // x^5 + x + c
    if (is_squarefree(f)) return f;
  }
  throw std::logic_error("no genus-2 sample");
}

long long count_points(const HyperCurve& c) {
  const Fq& F = *c.F;
  long long n = 0;
  for (FqElt x = 0; x < F.q(); ++x) {
    FqElt v = eval(c.f, x);
    if (v == 0)
      n += 1;
    else if (F.is_square(v))
      n += 2;
  }
  n += c.infinity == InfinityModel::OnePlace ? 1 : (F.is_square(c.f.lead()) ? 2 : 0);
  return n;
}

}  // namespace

BranchLocusResult branch_locus_dimension(BranchBase base, int r,
                                         const std::vector<std::uint32_t>& qs) {
  if (r != 2 && r != 4)
    throw std::invalid_argument("branch locus cases exist for r = 2 or 4");
  if (qs.size() < 2)
    throw std::invalid_argument("need at least two field sizes");
  BranchLocusResult out;
  out.base = base;
  out.r = r;

  std::optional<int> expo;
  bool consistent = true;
  for (std::uint32_t q : qs) {
    if (q > 13) throw std::invalid_argument("branch locus budget: q <= 13");
    FieldRef F = Fq::make(q, 1);
    long long count = 0;
    if (base == BranchBase::HyperellipticGenus2) {
      HyperCurve X = make_curve(F, pinned_genus2(F));
      SplitCurve S = SplitCurve::make_with_degree(X, 1);
      Divisor target = (r == 4 ? 2 : 1) * S.g12();
      long long h0 = rr_dimension(S, target);
      // members of |target| = points of P^{h0-1}(F_q)
      count = (static_cast<long long>(ipow(q, h0)) - 1) / (q - 1);
      out.note = "effective divisors linearly equivalent to " +
                 std::string(r == 4 ? "2*g12" : "g12");
    } else {
      HyperCurve E = make_curve(F, pinned_elliptic(F));
      SplitCurve S = SplitCurve::make_with_degree(E, 1);
      long long n = count_points(E);
      Divisor sample_class;  // a degree-2 class; h0 gives members per class
      sample_class.add_place(Place{PlaceKind::InfRamified, 0, 0}, 2);
      long long h0 = rr_dimension(S, sample_class);
      long long members = (static_cast<long long>(ipow(q, h0)) - 1) / (q - 1);
      if (r == 2) {
        // all effective degree-2 divisors: one linear system per degree-2
        // class, classes in bijection with E(F_q)
        count = n * members;
        out.note = "all effective degree-2 divisors (classes x members)";
      } else {
        // unordered pairs of linearly equivalent degree-2 divisors
        count = n * (members * (members + 1) / 2);
        out.note = "pairs D1 ~ D2 of effective degree-2 divisors";
      }
    }
    out.counts.emplace_back(q, count);
    int e = static_cast<int>(std::llround(std::log(static_cast<double>(count)) /
                                          std::log(static_cast<double>(q))));
    if (!expo)
      expo = e;
    else if (*expo != e)
      consistent = false;
  }
  if (consistent) out.exponent = expo;
  return out;
}

}  // namespace census
}  // namespace curveinv
