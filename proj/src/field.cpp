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

#include "curveinv/field.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace curveinv {

namespace {

constexpr std::uint32_t kMaxPrime = 997;
constexpr std::uint64_t kMaxFieldSize = 1000000;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- dense polynomial helpers over F_p, used only while building a field ---

using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  const size_t k = mod.size() - 1;  // mod monic of degree k
  for (size_t d = r.size(); d-- > k;) {
    std::uint32_t c = r[d];
    if (!c) continue;
    r[d] = 0;
    for (size_t j = 0; j < k; ++j) {
      std::uint64_t t = std::uint64_t(c) * mod[j] % p;
      r[d - k + j] = (r[d - k + j] + p - t) % p;
    }
  }
  r.resize(k, 0);
  PVec out(r.begin(), r.end());
  ptrim(out);
  return out;
}

PVec ppowmod(PVec base, std::uint64_t e, const PVec& mod, std::uint32_t p) {
  PVec r{1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, mod, p);
    base = pmulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

PVec pgcd(PVec a, PVec b, std::uint32_t p) {
  auto inv_mod = [p](std::uint32_t x) {
    std::uint64_t r = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b
    std::uint32_t lead_inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      if (a.back() == 0) {
        a.pop_back();
        continue;
      }
      std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[off + j] = (a[off + j] + p - std::uint32_t(c * b[j] % p)) % p;
      ptrim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
    ptrim(b);
  }
  return a;
}

bool irreducible_over_fp(const PVec& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size()) - 1;
  if (k == 1) return true;
  // x^{p^k} == x mod f, and gcd(x^{p^{k/l}} - x, f) == 1 for prime l | k
  auto x_pow = [&](std::uint64_t e) { return ppowmod(PVec{0, 1}, e, f, p); };
  std::uint64_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk *= p;
  PVec t = x_pow(pk);
  if (t != PVec{0, 1}) return false;
  for (std::uint32_t l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool lp = true;
    for (std::uint32_t d = 2; d * d <= l; ++d)
      if (l % d == 0) lp = false;
    if (!lp) continue;
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < k / l; ++i) e *= p;
    PVec u = x_pow(e);
    // u - x
    PVec diff = u;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    PVec g = pgcd(diff, f, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

PVec lex_smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return PVec{0, 1};  // x
  // coefficient tuples (c_0, ..., c_{k-1}) in lexicographic order, c_0 major
  PVec c(k, 0);
  for (;;) {
    PVec f = c;
    f.push_back(1);
    if (irreducible_over_fp(f, p)) return f;
    // next tuple: increment last coordinate
    std::uint32_t i = k;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw std::logic_error("no irreducible polynomial found");
    }
  }
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(static_cast<std::uint32_t>(n));
  return fs;
}

}  // namespace

FqElt Fq::mul_slow(FqElt a, FqElt b) const {
  PVec av = digits(a), bv = digits(b);
  ptrim(av);
  ptrim(bv);
  PVec r = pmulmod(av, bv, modulus_, p_);
  r.resize(k_, 0);
  return from_digits(r);
}

std::shared_ptr<const Fq> Fq::make(std::uint32_t p, std::uint32_t k) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::shared_ptr<const Fq>>
      cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }

  if (p == 2) throw std::invalid_argument("characteristic 2 unsupported");
  if (!is_prime(p) || p < 3 || p > kMaxPrime)
    throw std::invalid_argument("p must be an odd prime in [3, 997], got " +
                                std::to_string(p));
  if (k < 1) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw std::invalid_argument("field size p^k exceeds budget 10^6");
  }

  auto F = std::shared_ptr<Fq>(new Fq());
  F->p_ = p;
  F->k_ = k;
  F->q_ = static_cast<std::uint32_t>(q);
  F->modulus_ = lex_smallest_irreducible(p, k);

  // generator: smallest encoding whose order is q-1
  std::uint64_t qm1 = q - 1;
  auto factors = prime_factors(qm1);
  auto pow_slow = [&](FqElt a, std::uint64_t e) {
    FqElt r = 1;
    while (e) {
      if (e & 1) r = F->mul_slow(r, a);
      a = F->mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  FqElt gen = 0;
  for (FqElt c = 2; c < F->q_; ++c) {
    bool ok = true;
    for (auto l : factors)
      if (pow_slow(c, qm1 / l) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = c;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("no generator found");
  F->generator_ = gen;

  F->exp_.resize(qm1);
  F->log_.assign(F->q_, 0);
  FqElt cur = 1;
  for (std::uint64_t i = 0; i < qm1; ++i) {
    F->exp_[i] = cur;
    F->log_[cur] = static_cast<std::uint32_t>(i);
    cur = F->mul_slow(cur, gen);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, k), F);
  return it->second;
}

std::vector<std::uint32_t> Fq::digits(FqElt a) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FqElt Fq::from_digits(const std::vector<std::uint32_t>& d) const {
  FqElt a = 0;
  for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + (i < d.size() ? d[i] % p_ : 0);
  return a;
}

FqElt Fq::add(FqElt a, FqElt b) const {
  if (k_ == 1) {
    FqElt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  FqElt r = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    FqElt s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

FqElt Fq::neg(FqElt a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  FqElt r = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    FqElt d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

FqElt Fq::sub(FqElt a, FqElt b) const { return add(a, neg(b)); }

FqElt Fq::mul(FqElt a, FqElt b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
  std::uint64_t qm1 = q_ - 1;
  if (e >= qm1) e -= qm1;
  return exp_[e];
}

FqElt Fq::inv(FqElt a) const {
  if (a == 0) throw std::domain_error("division by zero in F_q");
  std::uint32_t qm1 = q_ - 1;
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : qm1 - l];
}

FqElt Fq::div(FqElt a, FqElt b) const { return mul(a, inv(b)); }

FqElt Fq::pow(FqElt a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::domain_error("division by zero in F_q");
    return 0;
  }
  long long qm1 = q_ - 1;
  long long ee = ((e % qm1) + qm1) % qm1;
  return exp_[std::uint64_t(log_[a]) * ee % qm1];
}

bool Fq::is_square(FqElt a) const {
  if (a == 0) return true;
  return log_[a] % 2 == 0;
}

std::optional<FqElt> Fq::sqrt(FqElt a) const {
  if (a == 0) return 0;
  std::uint32_t l = log_[a];
  if (l % 2 != 0) return std::nullopt;
  FqElt r1 = exp_[l / 2];
  FqElt r2 = neg(r1);
  return std::min(r1, r2);
}

FieldEmbedding::FieldEmbedding(FieldRef from, FieldRef into)
    : from_(std::move(from)), into_(std::move(into)) {
  if (from_->p() != into_->p() || into_->k() % from_->k() != 0)
    throw std::invalid_argument("no embedding between these fields");
  const std::uint32_t k = from_->k();
  root_pow_.assign(k, 0);
  root_pow_[0] = 1;
  if (k == 1) return;
  // smallest-encoded root of the small defining polynomial in the big field
  const auto& m = from_->modulus();
  FqElt root = 0;
  bool found = false;
  for (FqElt x = 0; x < into_->q(); ++x) {
    FqElt v = 0;
    for (std::uint32_t i = static_cast<std::uint32_t>(m.size()); i-- > 0;)
      v = into_->add(into_->mul(v, x), into_->from_int(m[i]));
    if (v == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("defining polynomial has no root upstairs");
  for (std::uint32_t i = 1; i < k; ++i)
    root_pow_[i] = into_->mul(root_pow_[i - 1], root);
}

FqElt FieldEmbedding::operator()(FqElt a) const {
  if (from_->k() == 1) return into_->from_int(a);
  auto d = from_->digits(a);
  FqElt r = 0;
  for (std::uint32_t i = 0; i < from_->k(); ++i)
    r = into_->add(r, into_->mul(into_->from_int(d[i]), root_pow_[i]));
  return r;
}

}  // namespace curveinv
