/**************************************************************************
 * include/galtower/finite_field.hpp
 *
 * Copyright 2026 The galtower Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace galtower {

/// Description of F_q, q = p^d. The modulus is listed low degree first and
/// must be monic of degree d; it is empty for prime fields.
struct FiniteFieldDesc {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> modulus;
  std::uint32_t max_order = 1u << 16;

  std::uint32_t degree() const { return modulus.empty() ? 1 : static_cast<std::uint32_t>(modulus.size() - 1); }
  bool operator==(const FiniteFieldDesc&) const = default;
};

/// F_q with elements encoded as integers 0..q-1: the base-p digits are the
/// coefficients of the residue polynomial in the generator `a`.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  explicit FiniteField(FiniteFieldDesc desc);

  const FiniteFieldDesc& desc() const { return desc_; }
  std::uint32_t characteristic() const { return desc_.p; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  /// The class of `a` in F_p[a]/(modulus); equals p when d > 1.
  Elem generator() const { return degree_ > 1 ? desc_.p : 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned long long e) const;

  /// The unique p-th root (F_q is perfect): a^{p^{d-1}}.
  Elem pth_root(Elem a) const;
  /// Some b with b^m = a, if one exists.
  std::optional<Elem> root(Elem a, std::uint64_t m) const;
  /// All z with z^m = 1, in increasing encoding order.
  std::vector<Elem> roots_of_unity(std::uint64_t m) const;

  std::string to_string(Elem a) const;

 private:
  Elem slow_mul(Elem a, Elem b) const;

  FiniteFieldDesc desc_;
  std::uint32_t degree_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> exp_;  // exp_[k] = g^k, length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

bool is_prime(std::uint64_t n);

/// Trial division by every monic polynomial of degree <= deg/2 over F_p.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace galtower
