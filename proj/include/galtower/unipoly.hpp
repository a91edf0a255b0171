/**************************************************************************
 * include/galtower/unipoly.hpp
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

// Univariate polynomials over K or over a tower, and the separable
// presentation f(t) = f_sep(t^{p^n}) of a polynomial in characteristic p.

#include <optional>
#include <string>
#include <vector>

#include "galtower/base_field.hpp"
#include "galtower/errors.hpp"
#include "galtower/poly_algo.hpp"

namespace galtower {

template <class F>
struct UniPoly {
  std::vector<typename F::Elem> coeffs;  // degree 0 first, trimmed

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const UniPoly&) const = default;
};

template <class F>
UniPoly<F> make_poly(const F& field, std::vector<typename F::Elem> coeffs) {
  poly::trim(field, coeffs);
  return UniPoly<F>{std::move(coeffs)};
}

/// t^d
template <class F>
UniPoly<F> monomial(const F& field, std::size_t d, typename F::Elem c) {
  std::vector<typename F::Elem> v(d + 1, field.zero());
  v[d] = std::move(c);
  return make_poly(field, std::move(v));
}

template <class F>
UniPoly<F> poly_add(const F& field, const UniPoly<F>& f, const UniPoly<F>& g) {
  return {poly::add(field, f.coeffs, g.coeffs)};
}
template <class F>
UniPoly<F> poly_sub(const F& field, const UniPoly<F>& f, const UniPoly<F>& g) {
  return {poly::sub(field, f.coeffs, g.coeffs)};
}
template <class F>
UniPoly<F> poly_mul(const F& field, const UniPoly<F>& f, const UniPoly<F>& g) {
  return {poly::mul(field, f.coeffs, g.coeffs)};
}
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> poly_divmod(const F& field, const UniPoly<F>& f, const UniPoly<F>& g) {
  auto [q, r] = poly::divmod(field, f.coeffs, g.coeffs);
  return {UniPoly<F>{std::move(q)}, UniPoly<F>{std::move(r)}};
}
template <class F>
UniPoly<F> poly_gcd(const F& field, const UniPoly<F>& f, const UniPoly<F>& g) {
  return {poly::gcd(field, f.coeffs, g.coeffs)};
}
template <class F>
UniPoly<F> poly_derivative(const F& field, const UniPoly<F>& f) {
  return {poly::derivative(field, f.coeffs)};
}
/// f(g(t))
template <class F>
UniPoly<F> poly_compose(const F& field, const UniPoly<F>& f, const UniPoly<F>& g) {
  return {poly::compose(field, f.coeffs, g.coeffs)};
}
template <class F>
typename F::Elem poly_eval(const F& field, const UniPoly<F>& f, const typename F::Elem& x) {
  return poly::eval(field, f.coeffs, x);
}

/// gcd(f, f') = 1. Throws ConstantPolynomial for constants.
template <class F>
bool is_separable_poly(const F& field, const UniPoly<F>& f) {
  if (f.degree() < 1) throw ConstantPolynomial("separability of a constant polynomial");
  auto g = poly::gcd(field, f.coeffs, poly::derivative(field, f.coeffs));
  return g.size() == 1;
}

template <class F>
struct SeparablePresentation {
  UniPoly<F> f_sep;
  unsigned n = 0;  // inseparability degree
};

/// f_sep(t^{p^n})
template <class F>
UniPoly<F> expand_presentation(const F& field, const SeparablePresentation<F>& sp) {
  std::size_t stride = 1;
  for (unsigned i = 0; i < sp.n; ++i) stride *= field.characteristic();
  if (sp.f_sep.is_zero()) return {};
  std::vector<typename F::Elem> out((sp.f_sep.coeffs.size() - 1) * stride + 1, field.zero());
  for (std::size_t i = 0; i < sp.f_sep.coeffs.size(); ++i) out[i * stride] = sp.f_sep.coeffs[i];
  return make_poly(field, std::move(out));
}

/// Repeatedly rewrites f(t) = g(t^p) while f' = 0. Throws PresentationFailure
/// when the terminal polynomial is still inseparable (reducible input).
template <class F>
SeparablePresentation<F> separable_presentation(const F& field, const UniPoly<F>& f) {
  if (f.degree() < 1) throw ConstantPolynomial("separable presentation of a constant polynomial");
  const std::size_t p = field.characteristic();
  SeparablePresentation<F> sp{f, 0};
  while (poly::derivative(field, sp.f_sep.coeffs).empty()) {
    const auto& c = sp.f_sep.coeffs;
    std::vector<typename F::Elem> g((c.size() - 1) / p + 1, field.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (field.is_zero(c[i])) continue;
      if (i % p != 0) throw NotReducible("f' = 0 but exponent " + std::to_string(i) + " is not divisible by p");
      g[i / p] = c[i];
    }
    sp.f_sep = make_poly(field, std::move(g));
    ++sp.n;
  }
  if (!is_separable_poly(field, sp.f_sep)) {
    throw PresentationFailure("terminal polynomial of degree " + std::to_string(sp.f_sep.degree()) +
                              " is inseparable; the input is not irreducible");
  }
  return sp;
}

/// Result of descending coefficients to their p^n-th roots.
template <class F>
struct DescendResult {
  std::optional<UniPoly<F>> poly;  // set on success
  std::size_t failing_index = 0;   // coefficient index lacking a root otherwise
};

/// sum lambda_i^{1/p^n} t^i for f_sep = sum lambda_i t^i.
template <class F>
DescendResult<F> descend_coefficients(const F& field, const SeparablePresentation<F>& sp) {
  DescendResult<F> out;
  std::vector<typename F::Elem> roots;
  for (std::size_t i = 0; i < sp.f_sep.coeffs.size(); ++i) {
    auto r = field.pth_power_root(sp.f_sep.coeffs[i], sp.n);
    if (!r) {
      out.failing_index = i;
      return out;
    }
    roots.push_back(*r);
  }
  out.poly = make_poly(field, std::move(roots));
  return out;
}

/// "c_d*t^d + ... + c_0" using the field's element text form.
template <class F>
std::string poly_to_string(const F& field, const UniPoly<F>& f, const std::string& var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) {
    if (field.is_zero(f.coeffs[i])) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i);
    std::string c = field.to_string(f.coeffs[i]);
    if (i == 0) {
      out += c;
    } else if (field.is_zero(field.sub(f.coeffs[i], field.one()))) {
      out += mono;
    } else {
      const bool wrap = c.find('+') != std::string::npos || c.find('/') != std::string::npos;
      out += (wrap ? "(" + c + ")" : c) + "*" + mono;
    }
  }
  return out;
}

/// Parse a polynomial in `var` with coefficients in K.
UniPoly<BaseField> parse_poly(const BaseField& k, const std::string& text, const std::string& var = "t");

}  // namespace galtower
