/**************************************************************************
 * include/galtower/base_field.hpp
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

// Exact arithmetic in K = F_q(x_1)(x_2)...(x_k).
//
// A FieldValue is either an F_q scalar or a reduced fraction num/den of dense
// polynomials in one variable x_L whose coefficients lie in F_q(x_1..x_{L-1}).
// Every value is stored at the lowest level that contains it, the
// denominator is monic, and gcd(num, den) = 1, so equal values have equal
// representations and equality is structural.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galtower/finite_field.hpp"

namespace galtower {

class FieldValue;

struct RationalNode {
  int level = 0;  // 1-based variable index of the outermost variable
  std::vector<FieldValue> num;
  std::vector<FieldValue> den;
};

class FieldValue {
 public:
  FieldValue() = default;
  static FieldValue from_scalar(std::uint32_t s) {
    FieldValue v;
    v.scalar_ = s;
    return v;
  }
  static FieldValue from_node(std::shared_ptr<const RationalNode> node) {
    FieldValue v;
    v.node_ = std::move(node);
    return v;
  }

  bool is_scalar() const { return node_ == nullptr; }
  std::uint32_t scalar() const { return scalar_; }
  int level() const { return node_ ? node_->level : 0; }
  const RationalNode& node() const { return *node_; }
  bool is_zero() const { return !node_ && scalar_ == 0; }
  bool is_one() const { return !node_ && scalar_ == 1; }

  friend bool operator==(const FieldValue& a, const FieldValue& b);
  friend bool operator!=(const FieldValue& a, const FieldValue& b) { return !(a == b); }

 private:
  std::uint32_t scalar_ = 0;
  std::shared_ptr<const RationalNode> node_;
};

struct BaseFieldDesc {
  FiniteFieldDesc ff;
  std::vector<std::string> variables;
  std::size_t degree_cap = 512;

  bool operator==(const BaseFieldDesc&) const = default;
};

class BaseField {
 public:
  using Elem = FieldValue;
  using Poly = std::vector<FieldValue>;

  explicit BaseField(BaseFieldDesc desc);

  const BaseFieldDesc& desc() const { return desc_; }
  const FiniteField& finite_field() const { return ff_; }
  std::uint32_t characteristic() const { return ff_.characteristic(); }
  std::size_t num_variables() const { return desc_.variables.size(); }
  std::size_t degree_cap() const { return desc_.degree_cap; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return Elem::from_scalar(1); }
  Elem scalar(std::uint32_t s) const { return Elem::from_scalar(s); }
  Elem from_int(long long v) const { return Elem::from_scalar(ff_.from_int(v)); }
  /// The i-th transcendental variable (0-based, innermost first).
  Elem variable(std::size_t i) const;
  /// The generator `a` of F_q over F_p.
  Elem ff_generator() const { return Elem::from_scalar(ff_.generator()); }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_one(const Elem& a) const { return a.is_one(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  /// True when a lies in F_q.
  bool is_constant(const Elem& a) const { return a.is_scalar(); }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, long long e) const;

  /// b with b^{p^e} = a, or nullopt when a has no p^e-th root in K.
  std::optional<Elem> pth_power_root(const Elem& a, unsigned e = 1) const;
  /// b with b^l = a for l prime to p, or nullopt.
  std::optional<Elem> lth_root(const Elem& a, std::uint64_t l) const;
  std::vector<Elem> roots_of_unity(std::uint64_t m) const;

  /// Coordinates of a over K^p in the monomial basis x^alpha, 0 <= alpha_j < p:
  /// returns c with a = sum_alpha c_alpha^p x^alpha, indexed by
  /// alpha_1 + p*alpha_2 + ... (innermost variable least significant).
  std::vector<Elem> frobenius_decompose(const Elem& a) const;
  std::size_t frobenius_basis_size() const;
  Elem frobenius_monomial(std::size_t index) const;

  /// Canonical text form, parseable by parse_field_value().
  std::string to_string(const Elem& a) const;

  /// Reduce num/den over x_level into canonical form.
  Elem make_fraction(int level, Poly num, Poly den) const;
  /// num and den of a viewed as a fraction in x_level (level >= a.level()).
  Poly numerator_at(const Elem& a, int level) const;
  Poly denominator_at(const Elem& a, int level) const;

 private:
  Elem wrap(int level, Poly num, Poly den) const;
  std::optional<Elem> pth_root_once(const Elem& a) const;
  std::optional<Poly> monic_lth_root(const Poly& f, std::uint64_t l) const;
  std::vector<Elem> decompose(const Elem& a, int level) const;
  std::string poly_to_string(const Poly& f, int level) const;

  BaseFieldDesc desc_;
  FiniteField ff_;
};

}  // namespace galtower
