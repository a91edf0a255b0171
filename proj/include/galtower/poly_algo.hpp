/**************************************************************************
 * include/galtower/poly_algo.hpp
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

// Dense univariate polynomial algorithms over any field context `F`.
//
// `F` provides: Elem, zero(), one(), is_zero(e), add, sub, neg, mul, inv,
// div, from_int(long long), degree_cap(). Coefficients are stored low degree
// first with trailing zeros trimmed; the zero polynomial is empty.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "galtower/errors.hpp"

namespace galtower::poly {

template <class F>
using Coeffs = std::vector<typename F::Elem>;

template <class F>
void trim(const F& field, Coeffs<F>& f) {
  while (!f.empty() && field.is_zero(f.back())) f.pop_back();
}

template <class F>
long degree(const Coeffs<F>& f) {
  return static_cast<long>(f.size()) - 1;
}

template <class F>
void check_degree(const F& field, long deg) {
  if (deg > static_cast<long>(field.degree_cap())) {
    throw DegreeOverflow("polynomial degree " + std::to_string(deg) + " exceeds cap " +
                         std::to_string(field.degree_cap()));
  }
}

template <class F>
Coeffs<F> add(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  Coeffs<F> out(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) {
      out[i] = field.add(a[i], b[i]);
    } else {
      out[i] = i < a.size() ? a[i] : b[i];
    }
  }
  trim(field, out);
  return out;
}

template <class F>
Coeffs<F> neg(const F& field, const Coeffs<F>& a) {
  Coeffs<F> out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(field.neg(c));
  return out;
}

template <class F>
Coeffs<F> sub(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  return add(field, a, neg(field, b));
}

template <class F>
Coeffs<F> scale(const F& field, const Coeffs<F>& a, const typename F::Elem& c) {
  if (field.is_zero(c)) return {};
  Coeffs<F> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(field.mul(x, c));
  trim(field, out);
  return out;
}

template <class F>
Coeffs<F> mul(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  if (a.empty() || b.empty()) return {};
  check_degree(field, degree<F>(a) + degree<F>(b));
  Coeffs<F> out(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (field.is_zero(b[j])) continue;
      out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
    }
  }
  trim(field, out);
  return out;
}

template <class F>
Coeffs<F> pow(const F& field, Coeffs<F> base, unsigned long long e) {
  Coeffs<F> result{field.one()};
  while (e > 0) {
    if (e & 1) result = mul(field, result, base);
    e >>= 1;
    if (e > 0) base = mul(field, base, base);
  }
  return result;
}

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
template <class F>
std::pair<Coeffs<F>, Coeffs<F>> divmod(const F& field, Coeffs<F> a, const Coeffs<F>& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  trim(field, a);
  if (a.size() < b.size()) return {Coeffs<F>{}, std::move(a)};
  const auto lc_inv = field.inv(b.back());
  const std::size_t db = b.size() - 1;
  Coeffs<F> q(a.size() - db, field.zero());
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    const auto c = field.mul(a.back(), lc_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < db; ++i) {
      if (field.is_zero(b[i])) continue;
      a[shift + i] = field.sub(a[shift + i], field.mul(c, b[i]));
    }
    a.pop_back();
    trim(field, a);
  }
  trim(field, q);
  return {std::move(q), std::move(a)};
}

template <class F>
Coeffs<F> make_monic(const F& field, const Coeffs<F>& a) {
  if (a.empty()) return a;
  if (field.is_zero(field.sub(a.back(), field.one()))) return a;
  return scale(field, a, field.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Coeffs<F> gcd(const F& field, Coeffs<F> a, Coeffs<F> b) {
  trim(field, a);
  trim(field, b);
  while (!b.empty()) {
    auto r = divmod(field, std::move(a), b).second;
    a = std::move(b);
    b = make_monic(field, r);
  }
  return make_monic(field, a);
}

template <class F>
Coeffs<F> derivative(const F& field, const Coeffs<F>& a) {
  if (a.size() <= 1) return {};
  Coeffs<F> out(a.size() - 1, field.zero());
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = field.mul(a[i], field.from_int(static_cast<long long>(i)));
  }
  trim(field, out);
  return out;
}

template <class F>
typename F::Elem eval(const F& field, const Coeffs<F>& a, const typename F::Elem& x) {
  auto acc = field.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = field.add(field.mul(acc, x), a[i]);
  return acc;
}

/// f(g(t)) by Horner's rule.
template <class F>
Coeffs<F> compose(const F& field, const Coeffs<F>& f, const Coeffs<F>& g) {
  Coeffs<F> acc;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = mul(field, acc, g);
    acc = add(field, acc, Coeffs<F>{f[i]});
  }
  trim(field, acc);
  return acc;
}

template <class F>
bool equal(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!field.is_zero(field.sub(a[i], b[i]))) return false;
  }
  return true;
}

}  // namespace galtower::poly
