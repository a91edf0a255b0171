/**************************************************************************
 * src/base_field.cpp
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

#include "galtower/base_field.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "galtower/errors.hpp"
#include "galtower/poly_algo.hpp"

namespace galtower {

bool operator==(const FieldValue& a, const FieldValue& b) {
  if (a.node_ == b.node_) return a.node_ != nullptr || a.scalar_ == b.scalar_;
  if (!a.node_ || !b.node_) return false;
  const RationalNode& x = *a.node_;
  const RationalNode& y = *b.node_;
  return x.level == y.level && x.num == y.num && x.den == y.den;
}

namespace {

bool needs_factor_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('/') != std::string::npos;
}

bool needs_denominator_parens(const std::string& s) {
  return needs_factor_parens(s) || s.find('*') != std::string::npos;
}

bool is_one_poly(const BaseField::Poly& f) { return f.size() == 1 && f[0].is_one(); }

}  // namespace

BaseField::BaseField(BaseFieldDesc desc) : desc_(std::move(desc)), ff_(desc_.ff) {
  desc_.ff = ff_.desc();
  std::set<std::string> seen;
  for (const auto& v : desc_.variables) {
    if (v.empty()) throw InvalidField("empty variable name");
    if (!seen.insert(v).second) throw InvalidField("duplicate variable name '" + v + "'");
    if (ff_.degree() > 1 && v == "a") throw InvalidField("'a' is reserved for the F_q generator");
  }
}

FieldValue BaseField::variable(std::size_t i) const {
  if (i >= desc_.variables.size()) throw InvalidField("variable index out of range");
  auto node = std::make_shared<RationalNode>();
  node->level = static_cast<int>(i) + 1;
  node->num = {zero(), one()};
  node->den = {one()};
  return Elem::from_node(std::move(node));
}

BaseField::Poly BaseField::numerator_at(const Elem& a, int level) const {
  if (a.level() == level && level > 0) return a.node().num;
  if (a.is_zero()) return {};
  return {a};
}

BaseField::Poly BaseField::denominator_at(const Elem& a, int level) const {
  if (a.level() == level && level > 0) return a.node().den;
  return {one()};
}

FieldValue BaseField::wrap(int level, Poly num, Poly den) const {
  if (num.empty()) return zero();
  if (num.size() == 1 && is_one_poly(den)) return num[0];
  auto node = std::make_shared<RationalNode>();
  node->level = level;
  node->num = std::move(num);
  node->den = std::move(den);
  return Elem::from_node(std::move(node));
}

FieldValue BaseField::make_fraction(int level, Poly num, Poly den) const {
  poly::trim(*this, num);
  poly::trim(*this, den);
  if (den.empty()) throw DivisionByZero("fraction with zero denominator");
  if (num.empty()) return zero();
  if (level == 0) return div(num[0], den[0]);
  if (den.size() > 1) {
    Poly g = poly::gcd(*this, num, den);
    if (g.size() > 1) {
      num = poly::divmod(*this, std::move(num), g).first;
      den = poly::divmod(*this, std::move(den), g).first;
    }
  }
  if (!den.back().is_one()) {
    const Elem c = inv(den.back());
    num = poly::scale(*this, num, c);
    den = poly::scale(*this, den, c);
  }
  return wrap(level, std::move(num), std::move(den));
}

FieldValue BaseField::add(const Elem& a, const Elem& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int la = a.level();
  const int lb = b.level();
  const int level = std::max(la, lb);
  if (level == 0) return Elem::from_scalar(ff_.add(a.scalar(), b.scalar()));
  if (la < level || lb < level) {
    // constant + n/d = (n + c d)/d stays reduced
    const Elem& c = la < level ? a : b;
    const RationalNode& f = (la < level ? b : a).node();
    Poly num = poly::add(*this, f.num, poly::scale(*this, f.den, c));
    return wrap(level, std::move(num), f.den);
  }
  const RationalNode& x = a.node();
  const RationalNode& y = b.node();
  if (is_one_poly(x.den) && is_one_poly(y.den)) {
    return wrap(level, poly::add(*this, x.num, y.num), x.den);
  }
  if (x.den == y.den) return make_fraction(level, poly::add(*this, x.num, y.num), x.den);
  Poly num = poly::add(*this, poly::mul(*this, x.num, y.den), poly::mul(*this, y.num, x.den));
  return make_fraction(level, std::move(num), poly::mul(*this, x.den, y.den));
}

FieldValue BaseField::neg(const Elem& a) const {
  if (a.is_scalar()) return Elem::from_scalar(ff_.neg(a.scalar()));
  const RationalNode& x = a.node();
  return wrap(x.level, poly::neg(*this, x.num), x.den);
}

FieldValue BaseField::mul(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const int la = a.level();
  const int lb = b.level();
  const int level = std::max(la, lb);
  if (level == 0) return Elem::from_scalar(ff_.mul(a.scalar(), b.scalar()));
  if (la < level || lb < level) {
    const Elem& c = la < level ? a : b;
    const RationalNode& f = (la < level ? b : a).node();
    return wrap(level, poly::scale(*this, f.num, c), f.den);
  }
  const RationalNode& x = a.node();
  const RationalNode& y = b.node();
  if (is_one_poly(x.den) && is_one_poly(y.den)) {
    return wrap(level, poly::mul(*this, x.num, y.num), x.den);
  }
  // cross-cancel so the product is already reduced
  Poly xn = x.num, yn = y.num, xd = x.den, yd = y.den;
  if (yd.size() > 1) {
    Poly g = poly::gcd(*this, xn, yd);
    if (g.size() > 1) {
      xn = poly::divmod(*this, std::move(xn), g).first;
      yd = poly::divmod(*this, std::move(yd), g).first;
    }
  }
  if (xd.size() > 1) {
    Poly g = poly::gcd(*this, yn, xd);
    if (g.size() > 1) {
      yn = poly::divmod(*this, std::move(yn), g).first;
      xd = poly::divmod(*this, std::move(xd), g).first;
    }
  }
  return wrap(level, poly::mul(*this, xn, yn), poly::mul(*this, xd, yd));
}

FieldValue BaseField::inv(const Elem& a) const {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  if (a.is_scalar()) return Elem::from_scalar(ff_.inv(a.scalar()));
  const RationalNode& x = a.node();
  const Elem c = inv(x.num.back());
  return wrap(x.level, poly::scale(*this, x.den, c), poly::scale(*this, x.num, c));
}

FieldValue BaseField::pow(const Elem& a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  if (a.is_scalar()) return Elem::from_scalar(ff_.pow(a.scalar(), static_cast<unsigned long long>(e)));
  Elem result = one();
  Elem base = a;
  auto k = static_cast<unsigned long long>(e);
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::optional<FieldValue> BaseField::pth_root_once(const Elem& a) const {
  if (a.is_scalar()) return Elem::from_scalar(ff_.pth_root(a.scalar()));
  const std::uint32_t p = characteristic();
  const RationalNode& x = a.node();
  auto root_poly = [&](const Poly& f) -> std::optional<Poly> {
    Poly out((f.size() - 1) / p + 1, zero());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero()) continue;
      if (i % p != 0) return std::nullopt;
      auto r = pth_root_once(f[i]);
      if (!r) return std::nullopt;
      out[i / p] = *r;
    }
    return out;
  };
  auto num = root_poly(x.num);
  if (!num) return std::nullopt;
  auto den = root_poly(x.den);
  if (!den) return std::nullopt;
  return wrap(x.level, std::move(*num), std::move(*den));
}

std::optional<FieldValue> BaseField::pth_power_root(const Elem& a, unsigned e) const {
  std::optional<Elem> cur = a;
  for (unsigned i = 0; i < e && cur; ++i) cur = pth_root_once(*cur);
  return cur;
}

std::optional<BaseField::Poly> BaseField::monic_lth_root(const Poly& f, std::uint64_t l) const {
  const std::size_t deg = f.size() - 1;
  if (deg % l != 0) return std::nullopt;
  const std::size_t m = deg / l;
  Poly root(m + 1, zero());
  root[m] = one();
  const Elem l_inv = inv(from_int(static_cast<long long>(l)));
  for (std::size_t j = 1; j <= m; ++j) {
    Poly s = poly::pow(*this, root, l);
    const Elem have = deg - j < s.size() ? s[deg - j] : zero();
    root[m - j] = mul(sub(f[deg - j], have), l_inv);
  }
  if (!poly::equal(*this, poly::pow(*this, root, l), f)) return std::nullopt;
  return root;
}

std::optional<FieldValue> BaseField::lth_root(const Elem& a, std::uint64_t l) const {
  if (l == 1) return a;
  if (l % characteristic() == 0) throw InvalidField("lth_root requires l prime to p");
  if (a.is_scalar()) {
    auto r = ff_.root(a.scalar(), l);
    if (!r) return std::nullopt;
    return Elem::from_scalar(*r);
  }
  const RationalNode& x = a.node();
  auto lc_root = lth_root(x.num.back(), l);
  if (!lc_root) return std::nullopt;
  auto num = monic_lth_root(poly::scale(*this, x.num, inv(x.num.back())), l);
  if (!num) return std::nullopt;
  auto den = monic_lth_root(x.den, l);
  if (!den) return std::nullopt;
  return wrap(x.level, poly::scale(*this, *num, *lc_root), std::move(*den));
}

std::vector<FieldValue> BaseField::roots_of_unity(std::uint64_t m) const {
  std::vector<Elem> out;
  for (auto z : ff_.roots_of_unity(m)) out.push_back(Elem::from_scalar(z));
  return out;
}

std::size_t BaseField::frobenius_basis_size() const {
  std::size_t size = 1;
  for (std::size_t i = 0; i < num_variables(); ++i) size *= characteristic();
  return size;
}

FieldValue BaseField::frobenius_monomial(std::size_t index) const {
  const std::uint32_t p = characteristic();
  Elem out = one();
  for (std::size_t i = 0; i < num_variables(); ++i) {
    const std::size_t e = index % p;
    index /= p;
    if (e > 0) out = mul(out, pow(variable(i), static_cast<long long>(e)));
  }
  return out;
}

std::vector<FieldValue> BaseField::frobenius_decompose(const Elem& a) const {
  return decompose(a, static_cast<int>(num_variables()));
}

std::vector<FieldValue> BaseField::decompose(const Elem& a, int level) const {
  const std::uint32_t p = characteristic();
  std::size_t lower = 1;
  for (int i = 1; i < level; ++i) lower *= p;
  if (level == 0) return {Elem::from_scalar(ff_.pth_root(a.scalar()))};
  std::vector<Elem> out(lower * p, zero());
  if (a.level() < level) {
    auto sub = decompose(a, level - 1);
    std::copy(sub.begin(), sub.end(), out.begin());
    return out;
  }
  // a = n/d = n d^{p-1} / d^p; split n d^{p-1} by exponent residue mod p.
  const RationalNode& x = a.node();
  Poly prod = poly::mul(*this, x.num, poly::pow(*this, x.den, p - 1));
  std::vector<Poly> parts(lower * p);
  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (prod[i].is_zero()) continue;
    const std::size_t s = i % p;
    const std::size_t t = i / p;
    auto sub = decompose(prod[i], level - 1);
    for (std::size_t beta = 0; beta < lower; ++beta) {
      if (sub[beta].is_zero()) continue;
      Poly& part = parts[beta + s * lower];
      if (part.size() <= t) part.resize(t + 1, zero());
      part[t] = add(part[t], sub[beta]);
    }
  }
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].empty()) continue;
    out[j] = make_fraction(level, std::move(parts[j]), x.den);
  }
  return out;
}

std::string BaseField::poly_to_string(const Poly& f, int level) const {
  const std::string& var = desc_.variables[static_cast<std::size_t>(level - 1)];
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string mono;
    if (i == 1) mono = var;
    if (i > 1) mono = var + "^" + std::to_string(i);
    if (i == 0) {
      os << to_string(f[i]);
    } else if (f[i].is_one()) {
      os << mono;
    } else {
      const std::string cs = to_string(f[i]);
      if (needs_factor_parens(cs)) {
        os << "(" << cs << ")*" << mono;
      } else {
        os << cs << "*" << mono;
      }
    }
  }
  return first ? "0" : os.str();
}

std::string BaseField::to_string(const Elem& a) const {
  if (a.is_scalar()) return ff_.to_string(a.scalar());
  const RationalNode& x = a.node();
  std::string num = poly_to_string(x.num, x.level);
  if (is_one_poly(x.den)) return num;
  std::string den = poly_to_string(x.den, x.level);
  if (needs_factor_parens(num)) num = "(" + num + ")";
  if (needs_denominator_parens(den)) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace galtower
