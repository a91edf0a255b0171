/**************************************************************************
 * src/finite_field.cpp
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

#include "galtower/finite_field.hpp"

#include <numeric>
#include <sstream>

#include "galtower/errors.hpp"

namespace galtower {

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic-or-not g over F_p.
Digits poly_rem_mod_p(Digits f, const Digits& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  std::uint64_t inv_lc = 1;
  for (std::uint32_t e = p - 2, b = g.back(); e > 0; e >>= 1, b = static_cast<std::uint32_t>(1ull * b * b % p)) {
    if (e & 1) inv_lc = inv_lc * b % p;
  }
  while (f.size() > dg) {
    const std::uint64_t c = f.back() * inv_lc % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - c * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Digits f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // enumerate monic g of degree d
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_rem_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(FiniteFieldDesc desc) : desc_(std::move(desc)) {
  const std::uint32_t p = desc_.p;
  if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
  for (auto c : desc_.modulus) {
    if (c >= p) throw InvalidField("modulus coefficient out of range");
  }
  if (desc_.modulus.size() == 1) throw InvalidField("modulus must have degree >= 1");
  if (desc_.modulus.size() == 2) {
    // degree-1 modulus describes F_p itself
    desc_.modulus.clear();
  }
  degree_ = desc_.degree();
  if (degree_ > 1) {
    if (desc_.modulus.back() != 1) throw InvalidField("modulus must be monic");
    if (!is_irreducible_mod_p(desc_.modulus, p)) throw InvalidField("modulus is reducible over F_p");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    q *= p;
    if (q > desc_.max_order) {
      throw FieldTooLarge("q = p^d exceeds the enumeration bound " + std::to_string(desc_.max_order));
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  // log/exp tables from a primitive element
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(order) + 1, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    for (k = 0; k < order; ++k) {
      exp_[k] = x;
      x = slow_mul(x, g);
      if (x == 1 && k + 1 < order) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  for (std::uint32_t k = 0; k < order; ++k) {
    log_[exp_[k]] = k;
    exp_[k + order] = exp_[k];
  }
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  const long long p = desc_.p;
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  const std::uint32_t p = desc_.p;
  if (degree_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  if (p == 2) return a ^ b;
  Elem out = 0;
  Elem place = 1;
  while (a != 0 || b != 0) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  const std::uint32_t p = desc_.p;
  if (p == 2) return a;
  if (degree_ == 1) return a == 0 ? 0 : p - a;
  Elem out = 0;
  Elem place = 1;
  while (a != 0) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of 0 in F_q");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

FiniteField::Elem FiniteField::pow(Elem a, unsigned long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

FiniteField::Elem FiniteField::pth_root(Elem a) const {
  unsigned long long e = 1;
  for (std::uint32_t i = 1; i < degree_; ++i) e *= desc_.p;
  return pow(a, e);
}

std::optional<FiniteField::Elem> FiniteField::root(Elem a, std::uint64_t m) const {
  if (m == 0) return a == 1 ? std::optional<Elem>(1) : std::nullopt;
  if (a == 0) return Elem{0};
  for (Elem b = 1; b < q_; ++b) {
    if (pow(b, m) == a) return b;
  }
  return std::nullopt;
}

std::vector<FiniteField::Elem> FiniteField::roots_of_unity(std::uint64_t m) const {
  std::vector<Elem> out;
  for (Elem z = 1; z < q_; ++z) {
    if (pow(z, m) == 1) out.push_back(z);
  }
  return out;
}

std::string FiniteField::to_string(Elem a) const {
  const std::uint32_t p = desc_.p;
  if (degree_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::vector<std::uint32_t> digits;
  while (a != 0) {
    digits.push_back(a % p);
    a /= p;
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const std::uint32_t c = digits[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "a";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

FiniteField::Elem FiniteField::slow_mul(Elem a, Elem b) const {
  const std::uint32_t p = desc_.p;
  if (degree_ == 1) return static_cast<Elem>(1ull * a * b % p);
  Digits x, y;
  for (; a; a /= p) x.push_back(a % p);
  for (; b; b /= p) y.push_back(b % p);
  if (x.empty() || y.empty()) return 0;
  Digits prod(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + 1ull * x[i] * y[j]) % p);
    }
  }
  Digits r = poly_rem_mod_p(prod, desc_.modulus, p);
  Elem out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p + r[i];
  return out;
}

}  // namespace galtower
