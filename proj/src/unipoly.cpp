/**************************************************************************
 * src/unipoly.cpp
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

#include "galtower/unipoly.hpp"

#include "galtower/expr.hpp"

namespace galtower {

namespace {

// K[t] as an expression-evaluation context; division only by constants.
struct PolyRing {
  using Elem = std::vector<FieldValue>;
  const BaseField& k;

  Elem from_int(long long v) const { return constant(k.from_int(v)); }
  Elem constant(const FieldValue& c) const { return c.is_zero() ? Elem{} : Elem{c}; }
  Elem add(const Elem& a, const Elem& b) const { return poly::add(k, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly::sub(k, a, b); }
  Elem neg(const Elem& a) const { return poly::neg(k, a); }
  Elem mul(const Elem& a, const Elem& b) const { return poly::mul(k, a, b); }
  Elem div(const Elem& a, const Elem& b) const {
    if (b.size() != 1) throw ParseError("division by a non-constant polynomial", 1, 1);
    return poly::scale(k, a, k.inv(b[0]));
  }
  Elem pow(const Elem& a, long long e) const {
    if (e < 0) {
      if (a.size() != 1) throw ParseError("negative power of a non-constant polynomial", 1, 1);
      return constant(k.pow(a[0], e));
    }
    return poly::pow(k, a, static_cast<unsigned long long>(e));
  }
};

}  // namespace

UniPoly<BaseField> parse_poly(const BaseField& k, const std::string& text, const std::string& var) {
  const PolyRing ring{k};
  const Expr e = parse_expression(text);
  auto coeffs = evaluate(e, ring, [&](const std::string& name) -> PolyRing::Elem {
    if (name == var) return {k.zero(), k.one()};
    const auto& vars = k.desc().variables;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return {k.variable(i)};
    }
    if (name == "a" && k.finite_field().degree() > 1) return {k.ff_generator()};
    throw UnknownName("'" + name + "' in polynomial");
  });
  return make_poly(k, std::move(coeffs));
}

}  // namespace galtower
