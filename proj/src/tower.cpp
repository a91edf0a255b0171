/**************************************************************************
 * src/tower.cpp
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

#include "galtower/tower.hpp"

#include <cstdio>
#include <numeric>
#include <random>

#include "galtower/errors.hpp"

namespace galtower {

namespace {

Vec lift(const Vec& v, std::size_t n) {
  Vec out(n);
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

std::vector<unsigned> prime_factors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

std::string canonical_spec_text(const TowerSpec& spec) {
  std::string s = "p=" + std::to_string(spec.base.ff.p) + ";modulus=";
  for (std::size_t i = 0; i < spec.base.ff.modulus.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spec.base.ff.modulus[i]);
  }
  s += ";vars=";
  for (std::size_t i = 0; i < spec.base.variables.size(); ++i) {
    if (i) s += ",";
    s += spec.base.variables[i];
  }
  for (const auto& g : spec.generators) {
    s += ";gen " + g.name + "^" + std::to_string(g.power) + "=" + g.value.to_string();
  }
  return s;
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

FieldTower FieldTower::trivial(const TowerSpec& spec, const TowerOptions& options,
                               std::shared_ptr<const BaseField> base) {
  auto d = std::make_shared<Data>();
  d->spec = TowerSpec{spec.base, {}};
  d->options = options;
  d->base = std::move(base);
  d->n = 1;
  d->exponents = {{}};
  d->table = {SparseVec{{0, d->base->one()}}};
  Mat one(1, 1);
  one(0, 0) = d->base->one();
  d->basis_mult = {one};
  d->hash = content_hash(canonical_spec_text(d->spec));
  FieldTower t(d);
  d->frobenius_images = {t.one()};
  d->frobenius_matrix = one;
  d->frobenius_independent = true;
  if (d->base->frobenius_basis_size() <= t.decomposition_cap()) {
    d->frobenius_parts = {{d->base->frobenius_decompose(d->base->one())}};
  }
  return t;
}

FieldTower FieldTower::extend(const GeneratorSpec& g, const TowerElem& c, std::vector<std::string> unverified) const {
  const BaseField& k = base();
  const std::size_t old_n = degree();
  const std::size_t m = g.power;
  const std::size_t n = old_n * m;

  auto d = std::make_shared<Data>();
  d->spec = spec();
  d->spec.generators.push_back(g);
  d->options = options();
  d->base = data_->base;
  d->n = n;
  d->relative_degrees = relative_degrees();
  d->relative_degrees.push_back(g.power);
  d->unverified = std::move(unverified);
  d->hash = content_hash(canonical_spec_text(d->spec));

  d->exponents.resize(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t a = 0; a < old_n; ++a) {
      auto e = exponents(a);
      e.push_back(static_cast<unsigned>(j));
      d->exponents[a + old_n * j] = std::move(e);
    }
  }
  for (const auto& r : data_->relation_values) d->relation_values.push_back(TowerElem{lift(r.coords, n)});
  d->relation_values.push_back(TowerElem{lift(c.coords, n)});

  const Mat mc = mult_matrix(c);
  d->table.resize(n * n);
  for (std::size_t j1 = 0; j1 < m; ++j1) {
    for (std::size_t j2 = 0; j2 < m; ++j2) {
      std::size_t j = j1 + j2;
      const bool wrap = j >= m;
      if (wrap) j -= m;
      for (std::size_t a = 0; a < old_n; ++a) {
        for (std::size_t b = 0; b < old_n; ++b) {
          const SparseVec& ab = product(a, b);
          SparseVec out;
          if (!wrap) {
            for (const auto& [idx, v] : ab) out.emplace_back(static_cast<std::uint32_t>(idx + old_n * j), v);
          } else {
            for (std::size_t r = 0; r < old_n; ++r) {
              FieldValue acc = k.zero();
              for (const auto& [idx, v] : ab) {
                if (!mc(r, idx).is_zero()) acc = k.add(acc, k.mul(mc(r, idx), v));
              }
              if (!acc.is_zero()) out.emplace_back(static_cast<std::uint32_t>(r + old_n * j), acc);
            }
          }
          d->table[(a + old_n * j1) * n + (b + old_n * j2)] = std::move(out);
        }
      }
    }
  }

  d->basis_mult.assign(n, Mat(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [idx, v] : d->table[i * n + j]) d->basis_mult[i](idx, j) = v;
    }
  }

  FieldTower t(d);
  const std::uint32_t p = k.characteristic();
  d->frobenius_matrix = Mat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d->frobenius_images.push_back(t.pow(t.basis_elem(i), p));
    for (std::size_t l = 0; l < n; ++l) d->frobenius_matrix(l, i) = d->frobenius_images[i].coords[l];
  }
  d->frobenius_independent = rank(k, d->frobenius_matrix) == n;
  if (k.frobenius_basis_size() <= t.decomposition_cap()) {
    d->frobenius_parts.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        d->frobenius_parts[i].push_back(k.frobenius_decompose(d->frobenius_images[i].coords[l]));
      }
    }
  }
  return t;
}

std::size_t FieldTower::decomposition_cap() const {
  if (options().decomposition_cap) return options().decomposition_cap;
  const std::uint64_t p = characteristic();
  return static_cast<std::size_t>(p * p * p * p);
}

FieldTower FieldTower::build(const TowerSpec& spec, const TowerOptions& options) {
  auto base = std::make_shared<const BaseField>(spec.base);
  const bool has_a = base->finite_field().degree() > 1;
  std::vector<std::string> seen = spec.base.variables;
  if (has_a) seen.push_back("a");
  for (std::size_t i = 0; i < spec.base.variables.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.base.variables[i] == spec.base.variables[j]) {
        throw InvalidTowerSpec("duplicate variable '" + spec.base.variables[i] + "'");
      }
    }
  }
  for (const auto& g : spec.generators) {
    if (g.name.empty()) throw InvalidTowerSpec("generator without a name");
    for (const auto& s : seen) {
      if (s == g.name) throw InvalidTowerSpec("name '" + g.name + "' is already in use");
    }
    seen.push_back(g.name);
    if (g.power < 2) throw InvalidTowerSpec("generator '" + g.name + "' needs an exponent of at least 2");
  }

  FieldTower t = trivial(spec, options, base);
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const auto& g = spec.generators[i];
    for (const auto& name : g.value.names()) {
      for (std::size_t j = i; j < spec.generators.size(); ++j) {
        if (spec.generators[j].name == name) {
          throw ForwardReference("'" + g.name + "' refers to '" + name + "', which is not defined yet");
        }
      }
    }
    if (t.degree() * g.power > options.degree_cap) {
      throw DegreeOverflow("tower degree " + std::to_string(t.degree() * g.power) + " exceeds the cap of " +
                           std::to_string(options.degree_cap));
    }
    const TowerElem c = t.evaluate(g.value);
    if (t.is_zero(c)) throw InvalidTowerSpec("'" + g.name + "' is defined as a root of zero");
    auto unverified = t.data_->unverified;
    t.check_binomial(i, g, c, unverified);
    t = t.extend(g, c, std::move(unverified));
  }
  if (!validate_multiplication_table(t)) throw InvariantViolation("multiplication table is not commutative and associative");
  return t;
}

// t^m - c over this field, by the Capelli criterion: irreducible iff c is not
// an l-th power for each prime l | m, and not in -4 F^4 when 4 | m.
void FieldTower::check_binomial(std::size_t index, const GeneratorSpec& g, const TowerElem& c,
                                std::vector<std::string>& unverified) const {
  const unsigned m = g.power;
  const auto fail = [&](unsigned l) {
    throw ReducibleBinomial("generator " + std::to_string(index) + " has " + std::to_string(l) +
                            "-th power as relation value");
  };
  bool decided = true;
  const std::uint32_t p = characteristic();
  for (unsigned l : prime_factors(m)) {
    const RootResult r = l == p ? pth_root(c, 1) : lth_root(c, l);
    if (r.status == RootStatus::Found) fail(l);
    if (r.status == RootStatus::Inconclusive) decided = false;
  }
  // -4c vanishes in characteristic 2, where the condition never applies.
  if (m % 4 == 0 && p != 2) {
    const TowerElem q = neg(scale(c, base().inv(base().from_int(4))));
    const RootResult r = lth_root(q, 4);
    if (r.status == RootStatus::Found) {
      throw ReducibleBinomial("generator " + std::to_string(index) + " has relation value in -4F^4 (l = 4)");
    }
    if (r.status == RootStatus::Inconclusive) decided = false;
  }
  if (!decided) unverified.push_back(g.name);
}

TowerElem FieldTower::zero() const { return TowerElem{Vec(degree())}; }

TowerElem FieldTower::one() const { return basis_elem(0); }

TowerElem FieldTower::embed(const FieldValue& c) const {
  TowerElem e = zero();
  e.coords[0] = c;
  return e;
}

TowerElem FieldTower::basis_elem(std::size_t i) const {
  TowerElem e = zero();
  e.coords.at(i) = base().one();
  return e;
}

TowerElem FieldTower::generator(std::size_t i) const {
  std::size_t stride = 1;
  for (std::size_t j = 0; j < i; ++j) stride *= relative_degrees().at(j);
  if (i >= num_generators()) throw InvalidTowerSpec("generator index out of range");
  return basis_elem(stride);
}

TowerElem FieldTower::add(const TowerElem& a, const TowerElem& b) const {
  return TowerElem{vec_add(base(), a.coords, b.coords)};
}
TowerElem FieldTower::sub(const TowerElem& a, const TowerElem& b) const {
  return TowerElem{vec_sub(base(), a.coords, b.coords)};
}
TowerElem FieldTower::neg(const TowerElem& a) const {
  TowerElem out = a;
  for (auto& c : out.coords) c = base().neg(c);
  return out;
}
TowerElem FieldTower::scale(const TowerElem& a, const FieldValue& c) const {
  return TowerElem{vec_scale(base(), a.coords, c)};
}

TowerElem FieldTower::mul(const TowerElem& a, const TowerElem& b) const {
  const BaseField& k = base();
  const std::size_t n = degree();
  if (a.coords.size() != n || b.coords.size() != n) throw DimensionMismatch("tower element of the wrong length");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords[j].is_zero()) continue;
      const FieldValue ab = k.mul(a.coords[i], b.coords[j]);
      for (const auto& [idx, v] : product(i, j)) out[idx] = k.add(out[idx], k.mul(ab, v));
    }
  }
  return TowerElem{std::move(out)};
}

TowerElem FieldTower::inv(const TowerElem& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero in the tower");
  if (auto c = as_base(a)) return embed(base().inv(*c));
  auto x = solve(base(), mult_matrix(a), one().coords);
  if (!x) throw InvariantViolation("nonzero tower element without an inverse");
  return TowerElem{std::move(*x)};
}

TowerElem FieldTower::pow(const TowerElem& a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  TowerElem result = one();
  TowerElem b = a;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return result;
}

Mat FieldTower::mult_matrix(const TowerElem& a) const {
  const BaseField& k = base();
  const std::size_t n = degree();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [idx, v] : product(i, j)) m(idx, j) = k.add(m(idx, j), k.mul(a.coords[i], v));
    }
  }
  return m;
}

std::optional<FieldValue> FieldTower::as_base(const TowerElem& a) const {
  for (std::size_t i = 1; i < a.coords.size(); ++i) {
    if (!a.coords[i].is_zero()) return std::nullopt;
  }
  return a.coords[0];
}

TowerElem FieldTower::frobenius_power(const TowerElem& a, unsigned e) const {
  TowerElem out = a;
  for (unsigned i = 0; i < e; ++i) out = pow(out, characteristic());
  return out;
}

RootResult FieldTower::pth_root(const TowerElem& d, unsigned e) const {
  const BaseField& k = base();
  const std::size_t n = degree();
  RootResult res{RootStatus::Found, d};
  for (unsigned step = 0; step < e; ++step) {
    const TowerElem target = res.root;
    if (data_->frobenius_independent) {
      // e_i^p independent: the coordinates of beta^p are b_i^p.
      auto u = solve(k, data_->frobenius_matrix, target.coords);
      if (!u) throw InvariantViolation("Frobenius images are independent but the system is inconsistent");
      TowerElem r = zero();
      for (std::size_t i = 0; i < n; ++i) {
        auto root = k.pth_power_root((*u)[i], 1);
        if (!root) return RootResult{RootStatus::NoRoot, {}};
        r.coords[i] = *root;
      }
      res.root = std::move(r);
      continue;
    }
    if (!decomposable()) return RootResult{RootStatus::Inconclusive, {}};
    // (beta^p)_l = sum_delta x^delta (sum_i b_i w_{il,delta})^p for
    // (e_i^p)_l = sum_delta w_{il,delta}^p x^delta; match against d_l.
    const std::size_t P = k.frobenius_basis_size();
    Mat a(n * P, n);
    Vec rhs(n * P);
    for (std::size_t l = 0; l < n; ++l) {
      const Vec t = k.frobenius_decompose(target.coords[l]);
      for (std::size_t delta = 0; delta < P; ++delta) {
        for (std::size_t i = 0; i < n; ++i) a(l * P + delta, i) = data_->frobenius_parts[i][l][delta];
        rhs[l * P + delta] = t[delta];
      }
    }
    auto b = solve(k, a, rhs);
    if (!b) return RootResult{RootStatus::NoRoot, {}};
    res.root = TowerElem{std::move(*b)};
  }
  if (!(frobenius_power(res.root, e) == d)) throw InvariantViolation("p-th root failed verification");
  return res;
}

Subspace FieldTower::frobenius_preimage(const Subspace& w) const {
  const BaseField& k = base();
  const std::size_t n = degree();
  if (w.ambient_dim() != n) throw DimensionMismatch("subspace of the wrong ambient dimension");
  if (!decomposable()) {
    throw StrategyPreconditionFailed("K/K^p basis of size " + std::to_string(k.frobenius_basis_size()) +
                                     " exceeds the decomposition cap");
  }
  // For an annihilator row a: sum_l a_l (beta^p)_l = sum_i b_i^p h_i with
  // h_i = sum_l a_l (e_i^p)_l, and this vanishes iff each K^p-component does.
  const std::size_t P = k.frobenius_basis_size();
  EchelonBuilder rows(n);
  for (const Vec& a : w.annihilator(k)) {
    std::vector<Vec> parts(n);
    for (std::size_t i = 0; i < n; ++i) {
      FieldValue h = k.zero();
      for (std::size_t l = 0; l < n; ++l) {
        if (!a[l].is_zero()) h = k.add(h, k.mul(a[l], data_->frobenius_images[i].coords[l]));
      }
      parts[i] = k.frobenius_decompose(h);
    }
    for (std::size_t delta = 0; delta < P; ++delta) {
      Vec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = parts[i][delta];
      if (!is_zero_vec(row)) rows.insert(k, row);
    }
  }
  return kernel_from_echelon(k, rows);
}

RootResult FieldTower::lth_root(const TowerElem& c, unsigned l) const {
  const BaseField& k = base();
  const std::size_t n = degree();
  if (l % characteristic() == 0) throw StrategyPreconditionFailed("lth_root needs l prime to p");
  if (is_zero(c)) return RootResult{RootStatus::Found, zero()};
  // Candidates lambda * monomial.
  for (std::size_t b = 0; b < n; ++b) {
    const TowerElem mono = basis_elem(b);
    const TowerElem q = b == 0 ? c : div(c, pow(mono, l));
    auto qb = as_base(q);
    if (!qb) continue;
    if (auto r = k.lth_root(*qb, l)) return RootResult{RootStatus::Found, scale(mono, *r)};
  }
  const auto cb = as_base(c);
  if (cb && std::gcd(n, static_cast<std::size_t>(l)) == 1) return RootResult{RootStatus::NoRoot, {}};
  const FieldValue norm = determinant(k, mult_matrix(c));
  if (!k.lth_root(norm, l)) return RootResult{RootStatus::NoRoot, {}};
  // Kummer case: every character eigenspace is K times a monomial, so a root
  // would have shown up among the candidates.
  if (cb) {
    const std::uint64_t q1 = static_cast<std::uint64_t>(k.finite_field().order()) - 1;
    bool kummer = true;
    for (std::size_t j = 0; j < num_generators(); ++j) {
      kummer = kummer && as_base(relation_value(j)).has_value() && q1 % relative_degrees()[j] == 0;
    }
    if (kummer) return RootResult{RootStatus::NoRoot, {}};
  }
  return RootResult{RootStatus::Inconclusive, {}};
}

TowerElem FieldTower::evaluate(const Expr& e) const {
  return galtower::evaluate(e, *this, [&](const std::string& name) {
    const auto& vars = base().desc().variables;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return embed(base().variable(i));
    }
    for (std::size_t i = 0; i < num_generators(); ++i) {
      if (spec().generators[i].name == name) return generator(i);
    }
    if (name == "a" && base().finite_field().degree() > 1) return embed(base().ff_generator());
    throw UnknownName("'" + name + "' is not a variable or generator of the tower");
  });
}

TowerElem FieldTower::parse(const std::string& text) const { return evaluate(parse_expression(text)); }

std::string FieldTower::monomial_name(std::size_t i) const {
  std::string out;
  const auto& e = exponents(i);
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += spec().generators[j].name;
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

std::string FieldTower::to_string(const TowerElem& a) const {
  std::string out;
  for (std::size_t i = a.coords.size(); i-- > 0;) {
    const FieldValue& c = a.coords[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = base().to_string(c);
    if (i == 0) {
      out += cs;
    } else if (c.is_one()) {
      out += monomial_name(i);
    } else {
      const bool wrap = cs.find_first_of("+/") != std::string::npos;
      out += (wrap ? "(" + cs + ")" : cs) + "*" + monomial_name(i);
    }
  }
  return out.empty() ? "0" : out;
}

bool validate_multiplication_table(const FieldTower& t) {
  const std::size_t n = t.degree();
  for (std::size_t j = 0; j < n; ++j) {
    if (t.product(0, j) != SparseVec{{static_cast<std::uint32_t>(j), t.base().one()}}) return false;
    for (std::size_t i = 0; i < j; ++i) {
      if (t.product(i, j) != t.product(j, i)) return false;
    }
  }
  const auto assoc = [&](std::size_t i, std::size_t j, std::size_t l) {
    const TowerElem ei = t.basis_elem(i), ej = t.basis_elem(j), el = t.basis_elem(l);
    return t.mul(t.mul(ei, ej), el) == t.mul(ei, t.mul(ej, el));
  };
  if (n <= 8) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          if (!assoc(i, j, l)) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t i = pick(rng), j = pick(rng), l = pick(rng);
    if (!assoc(i, j, l)) return false;
  }
  return true;
}

UniPoly<FieldTower> min_poly(const FieldTower& t, const TowerElem& a, const std::optional<SubfieldHandle>& over) {
  const BaseField& k = t.base();
  const std::vector<TowerElem> mb = over ? subfield_basis(*over) : std::vector<TowerElem>{t.one()};
  const std::size_t r = mb.size();
  std::vector<TowerElem> powers{t.one()};
  std::vector<Vec> columns;
  for (;;) {
    for (const auto& m : mb) columns.push_back(t.mul(m, powers.back()).coords);
    TowerElem next = t.mul(powers.back(), a);
    Mat sys(t.degree(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (std::size_t row = 0; row < t.degree(); ++row) sys(row, c) = columns[c][row];
    }
    if (auto x = solve(k, sys, next.coords)) {
      std::vector<TowerElem> coeffs;
      for (std::size_t i = 0; i < powers.size(); ++i) {
        TowerElem ci = t.zero();
        for (std::size_t j = 0; j < r; ++j) ci = t.add(ci, t.scale(mb[j], (*x)[i * r + j]));
        coeffs.push_back(t.neg(ci));
      }
      coeffs.push_back(t.one());
      return make_poly(t, std::move(coeffs));
    }
    powers.push_back(std::move(next));
    if (powers.size() > t.degree() + 1) throw InvariantViolation("minimal polynomial degree exceeds [L:K]");
  }
}

SubfieldHandle base_subfield(const FieldTower& t) {
  return SubfieldHandle{Subspace::span(t.base(), t.degree(), {t.one().coords}), {}};
}

SubfieldHandle whole_field(const FieldTower& t) {
  std::vector<TowerElem> gens;
  for (std::size_t i = 0; i < t.num_generators(); ++i) gens.push_back(t.generator(i));
  return SubfieldHandle{Subspace::full(t.base(), t.degree()), gens};
}

SubfieldHandle subfield_generate(const FieldTower& t, const std::vector<TowerElem>& gens) {
  const BaseField& k = t.base();
  EchelonBuilder span(t.degree());
  std::vector<TowerElem> members{t.one()};
  span.insert(k, t.one().coords);
  for (const auto& g : gens) {
    if (span.insert(k, g.coords)) members.push_back(g);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& g : gens) {
      TowerElem prod = t.mul(members[i], g);
      if (span.insert(k, prod.coords)) members.push_back(std::move(prod));
    }
  }
  return SubfieldHandle{span.finish(), gens};
}

SubfieldHandle subfield_from_space(const FieldTower& t, const Subspace& s) {
  if (!is_product_closed(t, s) || !s.contains(t.base(), t.one().coords)) {
    throw NotASubfield("subspace is not a subfield containing K");
  }
  SubfieldHandle h{s, {}};
  h.generators = subfield_basis(h);
  return h;
}

std::vector<TowerElem> subfield_basis(const SubfieldHandle& m) {
  std::vector<TowerElem> out;
  for (const auto& row : m.space.basis()) out.push_back(TowerElem{row});
  return out;
}

bool is_product_closed(const FieldTower& t, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) {
      if (!s.contains(t.base(), t.mul(TowerElem{b[i]}, TowerElem{b[j]}).coords)) return false;
    }
  }
  return true;
}

SubfieldHandle compositum(const FieldTower& t, const SubfieldHandle& m1, const SubfieldHandle& m2) {
  auto gens = subfield_basis(m1);
  for (auto& e : subfield_basis(m2)) gens.push_back(std::move(e));
  return subfield_generate(t, gens);
}

bool tensor_decomposition_check(const FieldTower& t, const SubfieldHandle& m1, const SubfieldHandle& m2) {
  return compositum(t, m1, m2).degree() == m1.degree() * m2.degree();
}

SubfieldHandle purely_inseparable_part_semilinear(const FieldTower& t) {
  Subspace s = base_subfield(t).space;
  for (std::size_t iter = 0;; ++iter) {
    Subspace next = t.frobenius_preimage(s);
    if (!subspace_contains(t.base(), next, s)) throw InvariantViolation("Frobenius preimage chain is not ascending");
    if (next == s) break;
    s = std::move(next);
    if (iter > t.degree()) throw InvariantViolation("Frobenius preimage chain does not stabilize");
  }
  return subfield_from_space(t, s);
}

bool is_purely_inseparable_tower(const FieldTower& t) {
  const std::uint64_t p = t.characteristic();
  for (std::size_t i = 0; i < t.num_generators(); ++i) {
    TowerElem g = t.generator(i);
    bool found = false;
    for (std::uint64_t pe = 1; pe <= t.degree(); pe *= p) {
      if (t.as_base(g)) {
        found = true;
        break;
      }
      g = t.pow(g, static_cast<long long>(p));
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace galtower
