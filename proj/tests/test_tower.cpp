/**************************************************************************
 * tests/test_tower.cpp
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

#include <gtest/gtest.h>

#include <map>

#include "galtower/errors.hpp"
#include "galtower/tower.hpp"
#include "test_support.hpp"

namespace galtower {
namespace {

using testing::galois_spec;
using testing::kummer_spec;
using testing::nonnormal_spec;
using testing::mixed_spec;
using testing::tower_spec;
using testing::nonmodular_spec;

// Independent multiplication: exponent vectors with coefficients, rewritten
// with g_i^{m_i} -> c_i until every exponent is below its bound.
class NaiveTower {
 public:
  using Elem = std::map<std::vector<unsigned>, FieldValue>;

  NaiveTower(const BaseField& k, const TowerSpec& spec) : k_(k), spec_(spec) {
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
      relations_.push_back(evaluate(spec.generators[i].value, *this, [&](const std::string& name) {
        for (std::size_t j = 0; j < spec.base.variables.size(); ++j) {
          if (spec.base.variables[j] == name) return constant(k.variable(j));
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (spec.generators[j].name == name) return generator(j);
        }
        throw UnknownName(name);
      }));
    }
  }

  Elem constant(const FieldValue& c) const {
    Elem e;
    if (!c.is_zero()) e[std::vector<unsigned>(spec_.generators.size())] = c;
    return e;
  }
  Elem generator(std::size_t i) const {
    std::vector<unsigned> ex(spec_.generators.size());
    ex[i] = 1;
    return reduce({{ex, k_.one()}});
  }
  Elem from_int(long long v) const { return constant(k_.from_int(v)); }
  Elem add(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (const auto& [e, c] : b) accumulate(out, e, c);
    return out;
  }
  Elem neg(const Elem& a) const {
    Elem out;
    for (const auto& [e, c] : a) out[e] = k_.neg(c);
    return out;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        std::vector<unsigned> e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        accumulate(out, e, k_.mul(ca, cb));
      }
    }
    return reduce(out);
  }
  Elem div(const Elem& a, const Elem& b) const {
    if (b.size() != 1 || b.begin()->first != std::vector<unsigned>(spec_.generators.size())) {
      throw Error("naive oracle divides by constants only");
    }
    return mul(a, constant(k_.inv(b.begin()->second)));
  }
  Elem pow(const Elem& a, long long e) const {
    Elem out = from_int(1);
    for (long long i = 0; i < e; ++i) out = mul(out, a);
    return out;
  }

  Vec coords(const Elem& a, std::size_t n) const {
    Vec v(n);
    for (const auto& [e, c] : a) {
      std::size_t idx = 0, stride = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        idx += e[i] * stride;
        stride *= spec_.generators[i].power;
      }
      v[idx] = c;
    }
    return v;
  }

 private:
  void accumulate(Elem& out, const std::vector<unsigned>& e, const FieldValue& c) const {
    FieldValue s = k_.add(out.count(e) ? out[e] : k_.zero(), c);
    if (s.is_zero()) {
      out.erase(e);
    } else {
      out[e] = s;
    }
  }

  Elem reduce(Elem a) const {
    for (;;) {
      bool changed = false;
      Elem out;
      for (const auto& [e, c] : a) {
        std::size_t i = e.size();
        while (i-- > 0 && e[i] < spec_.generators[i].power) {
        }
        if (i == static_cast<std::size_t>(-1)) {
          accumulate(out, e, c);
          continue;
        }
        changed = true;
        std::vector<unsigned> rest = e;
        rest[i] -= spec_.generators[i].power;
        for (const auto& [er, cr] : relations_[i]) {
          std::vector<unsigned> f(e.size());
          for (std::size_t j = 0; j < f.size(); ++j) f[j] = rest[j] + er[j];
          accumulate(out, f, k_.mul(c, cr));
        }
      }
      a = std::move(out);
      if (!changed) return a;
    }
  }

  const BaseField& k_;
  TowerSpec spec_;
  std::vector<Elem> relations_;
};

// Coefficients are polynomials in the first variable: gcds over the nested
// fraction fields swell quickly with fully random multivariate entries.
TowerElem random_elem(const FieldTower& t, std::mt19937_64& rng, int level = 1) {
  TowerElem e = t.zero();
  std::bernoulli_distribution sparse(0.5);
  for (auto& c : e.coords) {
    if (sparse(rng)) c = testing::random_poly_value(t.base(), rng, level, 2);
  }
  return e;
}

NaiveTower::Elem to_naive(const FieldTower& t, const NaiveTower& nt, const TowerElem& a) {
  NaiveTower::Elem out;
  for (std::size_t i = 0; i < t.degree(); ++i) {
    if (!a.coords[i].is_zero()) out[t.exponents(i)] = a.coords[i];
  }
  (void)nt;
  return out;
}

TEST(TowerBuild, KnownExamples) {
  FieldTower p53 = FieldTower::build(mixed_spec());
  EXPECT_EQ(p53.degree(), 6u);
  EXPECT_EQ(p53.relative_degrees(), (std::vector<unsigned>{3, 2}));
  EXPECT_TRUE(p53.irreducibility_verified());

  FieldTower wf = FieldTower::build(nonmodular_spec());
  EXPECT_EQ(wf.degree(), 8u);
  EXPECT_TRUE(wf.irreducibility_verified());

  FieldTower trivial = FieldTower::build(tower_spec(3, {"x"}, {}));
  EXPECT_EQ(trivial.degree(), 1u);
  EXPECT_EQ(trivial.one().coords.size(), 1u);

  for (const auto& spec : {kummer_spec(), galois_spec(), nonnormal_spec(), mixed_spec(5)}) {
    FieldTower t = FieldTower::build(spec);
    EXPECT_TRUE(t.irreducibility_verified()) << canonical_spec_text(spec);
  }
  EXPECT_EQ(FieldTower::build(mixed_spec(5)).degree(), 10u);
}

TEST(TowerBuild, ReducibleBinomials) {
  // x^2 is a square, y^3 a cube, x a square once sqrt(x) is present.
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"s", 2, "x^2"}})), ReducibleBinomial);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"y"}, {{"u", 3, "y^3"}})), ReducibleBinomial);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"s", 2, "x"}, {"r", 2, "x"}})), ReducibleBinomial);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x", "y"}, {{"u", 3, "y"}, {"w", 3, "y*x^3"}})),
               ReducibleBinomial);
  EXPECT_THROW(FieldTower::build(tower_spec(2, {"x"}, {{"s", 6, "x^3"}})), ReducibleBinomial);
}

TEST(TowerBuild, MinusFourFourthPower) {
  // 2x^4 is not a square in F_3(x), but 2x^4 = -4 x^4 and
  // t^4 + 4 l^4 = (t^2 + 2lt + 2l^2)(t^2 - 2lt + 2l^2).
  BaseField k = testing::make_base(3, {"x"});
  const FieldValue x = k.variable(0);
  const FieldValue c = k.mul(k.from_int(2), k.pow(x, 4));
  EXPECT_FALSE(k.lth_root(c, 2).has_value());
  using P = std::vector<FieldValue>;
  const FieldValue two = k.from_int(2);
  P f1{k.mul(two, k.mul(x, x)), k.mul(two, x), k.one()};
  P f2{k.mul(two, k.mul(x, x)), k.neg(k.mul(two, x)), k.one()};
  P prod = poly::mul(k, f1, f2);
  P target{k.neg(c), k.zero(), k.zero(), k.zero(), k.one()};
  ASSERT_TRUE(poly::equal(k, prod, target));
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"g", 4, "2*x^4"}})), ReducibleBinomial);
  // Not in -4F^4: builds.
  EXPECT_NO_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"g", 4, "x"}})));
}

TEST(TowerBuild, InvalidSpecs) {
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"s", 2, "r"}, {"r", 2, "x"}})), ForwardReference);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"s", 2, "s + x"}})), ForwardReference);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"s", 2, "q"}})), UnknownName);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"x", 2, "x"}})), InvalidTowerSpec);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"s", 2, "x"}, {"s", 3, "x"}})), InvalidTowerSpec);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"s", 1, "x"}})), InvalidTowerSpec);
  EXPECT_THROW(FieldTower::build(tower_spec(3, {"x"}, {{"s", 2, "x - x"}})), InvalidTowerSpec);
  TowerOptions small;
  small.degree_cap = 4;
  EXPECT_THROW(FieldTower::build(mixed_spec(), small), DegreeOverflow);
}

TEST(TowerBuild, UnverifiedFlag) {
  // c = 2(1+s)^2: not a square in K(s) (2 is not), but its norm is a square
  // and no lambda*monomial form applies, so the test cannot decide.
  FieldTower t = FieldTower::build(tower_spec(3, {"x"}, {{"s", 2, "x"}, {"r", 2, "2*(x + 1) + s"}}));
  EXPECT_EQ(t.degree(), 4u);
  EXPECT_FALSE(t.irreducibility_verified());
  EXPECT_EQ(t.unverified_generators(), std::vector<std::string>{"r"});
}

TEST(TowerArith, KnownExamples) {
  FieldTower t = FieldTower::build(mixed_spec());
  const TowerElem u = t.generator(0), v = t.generator(1);
  const TowerElem x = t.parse("x"), y = t.parse("y");
  EXPECT_EQ(t.mul(u, t.mul(u, u)), y);
  EXPECT_EQ(t.mult_matrix(t.one()), Mat::identity(6));
  EXPECT_EQ(t.mul(t.add(u, v), t.sub(u, v)), t.sub(t.mul(u, u), x));
  EXPECT_EQ(t.to_string(t.sub(t.mul(u, u), x)), "u^2 + 2*x");
  EXPECT_THROW(t.inv(t.zero()), DivisionByZero);
}

TEST(TowerArith, MatchesNaiveOracle) {
  std::mt19937_64 rng(7);
  for (const auto& spec : {mixed_spec(), nonmodular_spec(), kummer_spec(), nonnormal_spec()}) {
    FieldTower t = FieldTower::build(spec);
    NaiveTower nt(t.base(), spec);
    for (int trial = 0; trial < 20; ++trial) {
      const TowerElem a = random_elem(t, rng), b = random_elem(t, rng);
      const auto expected = nt.coords(nt.mul(to_naive(t, nt, a), to_naive(t, nt, b)), t.degree());
      EXPECT_EQ(t.mul(a, b).coords, expected) << canonical_spec_text(spec);
    }
    for (std::size_t i = 0; i < t.num_generators(); ++i) {
      EXPECT_EQ(t.pow(t.generator(i), spec.generators[i].power).coords,
                nt.coords(nt.pow(nt.generator(i), spec.generators[i].power), t.degree()));
    }
  }
}

TEST(TowerArith, FieldProperties) {
  std::mt19937_64 rng(11);
  for (const auto& spec : {mixed_spec(), nonmodular_spec(), galois_spec()}) {
    FieldTower t = FieldTower::build(spec);
    EXPECT_TRUE(validate_multiplication_table(t));
    const int level = t.degree() > 6 ? 0 : 1;
    for (int trial = 0; trial < 10; ++trial) {
      TowerElem a = random_elem(t, rng, level), b = random_elem(t, rng, level);
      if (t.is_zero(a)) a = t.one();
      EXPECT_EQ(t.mul(a, t.inv(a)), t.one());
      EXPECT_EQ(t.mult_matrix(t.mul(a, b)), mat_mul(t.base(), t.mult_matrix(a), t.mult_matrix(b)));
      EXPECT_EQ(t.parse(t.to_string(a)), a);
    }
  }
}

TEST(TowerMinPoly, KnownExamples) {
  FieldTower t = FieldTower::build(mixed_spec());
  const TowerElem u = t.generator(0), v = t.generator(1);
  auto f = min_poly(t, u);
  ASSERT_EQ(f.degree(), 3);
  EXPECT_EQ(f.coeffs[0], t.neg(t.parse("y")));
  EXPECT_TRUE(t.is_zero(f.coeffs[1]) && t.is_zero(f.coeffs[2]));
  EXPECT_EQ(f.coeffs[3], t.one());

  const TowerElem uv = t.mul(u, v);
  auto g = min_poly(t, uv);
  EXPECT_EQ(g.degree(), 6);
  // Oracle: 1, uv, ..., (uv)^5 have full rank.
  Mat powers(6, 6);
  TowerElem pw = t.one();
  for (std::size_t c = 0; c < 6; ++c, pw = t.mul(pw, uv)) {
    for (std::size_t r = 0; r < 6; ++r) powers(r, c) = pw.coords[r];
  }
  EXPECT_EQ(rank(t.base(), powers), 6u);

  FieldTower wf = FieldTower::build(nonmodular_spec());
  const TowerElem z = wf.generator(0), w = wf.generator(1);
  auto h = min_poly(wf, w, subfield_generate(wf, {z}));
  ASSERT_EQ(h.degree(), 2);
  EXPECT_EQ(h.coeffs[0], wf.neg(wf.parse("a*z^2 + b")));
  EXPECT_TRUE(wf.is_zero(h.coeffs[1]));
}

TEST(TowerMinPoly, Properties) {
  std::mt19937_64 rng(3);
  for (const auto& spec : {mixed_spec(), nonmodular_spec(), kummer_spec()}) {
    FieldTower t = FieldTower::build(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const TowerElem a = random_elem(t, rng);
      auto f = min_poly(t, a);
      EXPECT_TRUE(t.is_zero(poly_eval(t, f, a)));
      EXPECT_EQ(t.degree() % static_cast<std::size_t>(f.degree()), 0u);
      for (const auto& c : f.coeffs) EXPECT_TRUE(t.as_base(c).has_value());
    }
  }
}

TEST(TowerSubfield, KnownExamples) {
  FieldTower t = FieldTower::build(mixed_spec());
  const TowerElem u = t.generator(0), v = t.generator(1);
  EXPECT_EQ(subfield_generate(t, {u}).degree(), 3u);
  EXPECT_EQ(subfield_generate(t, {}).degree(), 1u);
  EXPECT_EQ(subfield_generate(t, {}), base_subfield(t));
  EXPECT_EQ(subfield_generate(t, {t.mul(u, v)}), whole_field(t));
}

TEST(TowerSubfield, Invariants) {
  std::mt19937_64 rng(5);
  for (const auto& spec : {mixed_spec(), nonmodular_spec(), kummer_spec()}) {
    FieldTower t = FieldTower::build(spec);
    for (int trial = 0; trial < 6; ++trial) {
      SubfieldHandle m = subfield_generate(t, {random_elem(t, rng)});
      EXPECT_TRUE(m.space.contains(t.base(), t.one().coords));
      EXPECT_TRUE(is_product_closed(t, m.space));
      EXPECT_EQ(t.degree() % m.degree(), 0u);
    }
  }
}

TEST(TowerFrobenius, KnownExamples) {
  FieldTower t = FieldTower::build(mixed_spec());
  const TowerElem u = t.generator(0), v = t.generator(1);
  RootResult r = t.pth_root(t.parse("y"));
  ASSERT_EQ(r.status, RootStatus::Found);
  EXPECT_EQ(r.root, u);
  EXPECT_EQ(t.frobenius_power(t.add(u, v), 1), t.parse("y + x*v"));

  // Oracle: beta^3 has 1-coordinate sum_a b_a^3 y^a, in K^3 + y K^3 + y^2 K^3;
  // x has a nonzero x-component over K^3.
  const BaseField& k = t.base();
  const auto parts = k.frobenius_decompose(k.variable(0));
  bool outside = false;
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    if (idx % 3 != 0 && !parts[idx].is_zero()) outside = true;
  }
  EXPECT_TRUE(outside);
  EXPECT_EQ(t.pth_root(t.parse("x")).status, RootStatus::NoRoot);
}

TEST(TowerFrobenius, RootRoundTrip) {
  std::mt19937_64 rng(9);
  for (const auto& spec : {mixed_spec(), nonmodular_spec(), galois_spec(), kummer_spec()}) {
    FieldTower t = FieldTower::build(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const TowerElem a = random_elem(t, rng), b = random_elem(t, rng);
      EXPECT_EQ(t.frobenius_power(t.add(a, b), 1), t.add(t.frobenius_power(a, 1), t.frobenius_power(b, 1)));
      RootResult r = t.pth_root(t.frobenius_power(a, 2), 2);
      ASSERT_EQ(r.status, RootStatus::Found);
      EXPECT_EQ(r.root, a);
    }
  }
  FieldTower wf = FieldTower::build(nonmodular_spec());
  EXPECT_EQ(wf.pth_root(wf.parse("a*z^2 + b")).root, wf.generator(1));
  EXPECT_EQ(wf.pth_root(wf.parse("a^2*c + b^2"), 2).root, wf.generator(1));
  EXPECT_EQ(wf.pth_root(wf.parse("a")).status, RootStatus::NoRoot);
}

TEST(TowerFrobenius, DecompositionCap) {
  TowerOptions opts;
  opts.decomposition_cap = 1;
  FieldTower t = FieldTower::build(mixed_spec(), opts);
  EXPECT_EQ(t.pth_root(t.parse("y")).status, RootStatus::Inconclusive);
  EXPECT_THROW(purely_inseparable_part_semilinear(t), StrategyPreconditionFailed);
}

TEST(TowerPurelyInseparable, KnownExamples) {
  FieldTower t = FieldTower::build(mixed_spec());
  SubfieldHandle pi = purely_inseparable_part_semilinear(t);
  EXPECT_EQ(pi.degree(), 3u);
  EXPECT_EQ(pi, subfield_generate(t, {t.generator(0)}));
  for (const auto& b : subfield_basis(pi)) EXPECT_TRUE(t.as_base(t.frobenius_power(b, 1)).has_value());

  FieldTower wf = FieldTower::build(nonmodular_spec());
  EXPECT_EQ(purely_inseparable_part_semilinear(wf).degree(), 8u);
  EXPECT_TRUE(wf.as_base(wf.frobenius_power(wf.generator(1), 2)).has_value());
  EXPECT_TRUE(is_purely_inseparable_tower(wf));

  EXPECT_EQ(purely_inseparable_part_semilinear(FieldTower::build(galois_spec())).degree(), 1u);
  EXPECT_EQ(purely_inseparable_part_semilinear(FieldTower::build(nonnormal_spec())).degree(), 1u);
  EXPECT_EQ(purely_inseparable_part_semilinear(FieldTower::build(kummer_spec())).degree(), 1u);
  EXPECT_FALSE(is_purely_inseparable_tower(t));
  EXPECT_EQ(purely_inseparable_part_semilinear(FieldTower::build(mixed_spec(5))).degree(), 5u);
}

TEST(TowerCompositum, KnownExamples) {
  FieldTower t = FieldTower::build(mixed_spec());
  const SubfieldHandle ku = subfield_generate(t, {t.generator(0)});
  const SubfieldHandle kv = subfield_generate(t, {t.generator(1)});
  EXPECT_EQ(compositum(t, ku, kv), whole_field(t));
  EXPECT_TRUE(tensor_decomposition_check(t, ku, kv));
  EXPECT_EQ(compositum(t, ku, ku), ku);
  EXPECT_FALSE(tensor_decomposition_check(t, ku, ku));
  EXPECT_TRUE(tensor_decomposition_check(t, base_subfield(t), whole_field(t)));
}

TEST(TowerHash, Deterministic) {
  FieldTower a = FieldTower::build(mixed_spec());
  FieldTower b = FieldTower::build(mixed_spec());
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  EXPECT_NE(a.hash(), FieldTower::build(mixed_spec(5)).hash());
  EXPECT_EQ(content_hash(""), "cbf29ce484222325");
}

}  // namespace
}  // namespace galtower
