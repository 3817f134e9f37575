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

#ifndef CURVEINV_FIELD_HPP_
#define CURVEINV_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace curveinv {

/// An element of F_{p^k}, encoded as sum c_i * p^i for the coefficient
/// vector (c_0, ..., c_{k-1}) of its residue modulo the defining polynomial.
using FqElt = std::uint32_t;

/// Exact arithmetic context for F_{p^k}, p an odd prime, p^k <= 10^6.
///
/// Extension fields are quotients by the lexicographically smallest monic
/// irreducible of degree k, so identical (p, k) always name the identical
/// field, element for element. Multiplication runs on log/exp tables built
/// from a deterministic generator; all operations are O(k) or O(1).
class Fq {
 public:
  static std::shared_ptr<const Fq> make(std::uint32_t p, std::uint32_t k = 1);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }

  /// Defining polynomial, length k+1, lowest degree first, monic. For k == 1
  /// this is the polynomial x.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElt zero() const { return 0; }
  FqElt one() const { return 1; }
  FqElt from_int(std::uint64_t n) const { return static_cast<FqElt>(n % p_); }

  FqElt add(FqElt a, FqElt b) const;
  FqElt sub(FqElt a, FqElt b) const;
  FqElt neg(FqElt a) const;
  FqElt mul(FqElt a, FqElt b) const;
  FqElt inv(FqElt a) const;
  FqElt div(FqElt a, FqElt b) const;
  FqElt pow(FqElt a, long long e) const;

  bool is_square(FqElt a) const;
  std::optional<FqElt> sqrt(FqElt a) const;  // the root with smaller encoding

  /// Smallest generator of the multiplicative group (by element encoding).
  FqElt generator() const { return generator_; }

  std::vector<std::uint32_t> digits(FqElt a) const;
  FqElt from_digits(const std::vector<std::uint32_t>& d) const;

  /// All field elements in encoding order: 0, 1, ..., q-1.
  std::uint32_t size() const { return q_; }

 private:
  Fq() = default;

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<FqElt> exp_;         // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_; // log_[a] for a != 0
  FqElt generator_ = 0;

  FqElt mul_slow(FqElt a, FqElt b) const;
};

using FieldRef = std::shared_ptr<const Fq>;

/// Deterministic embedding F_{p^k} -> F_{p^m} for k | m: the defining root of
/// the small field is sent to its smallest-encoded image in the big field.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldRef from, FieldRef into);

  FqElt operator()(FqElt a) const;
  const FieldRef& from() const { return from_; }
  const FieldRef& into() const { return into_; }

 private:
  FieldRef from_, into_;
  std::vector<FqElt> root_pow_;  // images of 1, alpha, ..., alpha^{k-1}
};

}  // namespace curveinv

#endif  // CURVEINV_FIELD_HPP_
