/**************************************************************************
 * tests/test_unipoly.cpp
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

#include <random>

#include "galtower/unipoly.hpp"
#include "test_support.hpp"

using namespace galtower;
using galtower::testing::make_base;
using galtower::testing::random_value;

using KPoly = UniPoly<BaseField>;

TEST(UniPoly, DerivativeVanishesInCharacteristicThree) {
  const BaseField k = make_base(3, {"x"});
  EXPECT_TRUE(poly_derivative(k, parse_poly(k, "t^3 - x")).is_zero());
}

TEST(UniPoly, GcdOfCommonFactor) {
  const BaseField k = make_base(5, {"x"});
  const KPoly g = poly_gcd(k, parse_poly(k, "t^2 - x^2"), parse_poly(k, "t - x"));
  EXPECT_EQ(g, parse_poly(k, "t - x"));
}

TEST(UniPoly, DivmodMatchesLongDivision) {
  const BaseField k = make_base(2, {"x"});
  const KPoly f = parse_poly(k, "t^3 - x");
  const KPoly d = parse_poly(k, "t - 1");
  auto [q, r] = poly_divmod(k, f, d);
  EXPECT_EQ(q, parse_poly(k, "t^2 + t + 1"));
  EXPECT_EQ(r, parse_poly(k, "1 + x"));
  // oracle: q*d + r reproduces f
  EXPECT_EQ(poly_add(k, poly_mul(k, q, d), r), f);
  EXPECT_THROW(poly_divmod(k, f, KPoly{}), DivisionByZero);
}

TEST(UniPoly, SeparabilityCriterion) {
  const BaseField k3 = make_base(3, {"x"});
  EXPECT_TRUE(is_separable_poly(k3, parse_poly(k3, "t^2 - x")));
  EXPECT_FALSE(is_separable_poly(k3, parse_poly(k3, "t^3 - x")));
  const BaseField k2 = make_base(2, {"x"});
  EXPECT_FALSE(is_separable_poly(k2, parse_poly(k2, "t^4 - x")));
  EXPECT_THROW(is_separable_poly(k2, parse_poly(k2, "x")), ConstantPolynomial);
}

TEST(SeparablePresentation, Examples) {
  const BaseField k3 = make_base(3, {"x", "y"});
  auto sp = separable_presentation(k3, parse_poly(k3, "t^3 - y"));
  EXPECT_EQ(sp.n, 1u);
  EXPECT_EQ(sp.f_sep, parse_poly(k3, "t - y"));

  sp = separable_presentation(k3, parse_poly(k3, "t^2 - x"));
  EXPECT_EQ(sp.n, 0u);
  EXPECT_EQ(sp.f_sep, parse_poly(k3, "t^2 - x"));

  const BaseField k2 = make_base(2, {"x", "y"});
  auto sp2 = separable_presentation(k2, parse_poly(k2, "t^8 + x*t^4 + y"));
  EXPECT_EQ(sp2.n, 2u);
  EXPECT_EQ(sp2.f_sep, parse_poly(k2, "t^2 + x*t + y"));
}

TEST(SeparablePresentation, ReducibleInseparableInputFails) {
  const BaseField k = make_base(3, {"x"});
  EXPECT_THROW(separable_presentation(k, parse_poly(k, "t^2")), PresentationFailure);
  EXPECT_THROW(separable_presentation(k, parse_poly(k, "x")), ConstantPolynomial);
}

TEST(SeparablePresentation, DescendCoefficients) {
  const BaseField k3 = make_base(3, {"x", "y"});
  auto d = descend_coefficients(k3, SeparablePresentation<BaseField>{parse_poly(k3, "t - y"), 1});
  EXPECT_FALSE(d.poly.has_value());
  EXPECT_EQ(d.failing_index, 0u);

  const BaseField k2 = make_base(2, {"x", "y"});
  d = descend_coefficients(k2, SeparablePresentation<BaseField>{parse_poly(k2, "t - y^2"), 1});
  ASSERT_TRUE(d.poly.has_value());
  EXPECT_EQ(*d.poly, parse_poly(k2, "t - y"));

  d = descend_coefficients(k2, SeparablePresentation<BaseField>{parse_poly(k2, "t^2 + x^2*t + y^4"), 2});
  EXPECT_FALSE(d.poly.has_value());
  EXPECT_EQ(d.failing_index, 1u);  // x^2 has no 4th root
}

namespace {

KPoly random_poly(const BaseField& k, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::vector<FieldValue> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_value(k, rng));
  while (c.back().is_zero()) c.back() = random_value(k, rng);
  return make_poly(k, std::move(c));
}

}  // namespace

TEST(UniPolyProperties, LeibnizAndGcdDivisibility) {
  std::mt19937_64 rng(99);
  const BaseField k = make_base(3, {"x"});
  for (int i = 0; i < 100; ++i) {
    const KPoly f = random_poly(k, rng, 4);
    const KPoly g = random_poly(k, rng, 4);
    EXPECT_EQ(poly_derivative(k, poly_add(k, f, g)), poly_add(k, poly_derivative(k, f), poly_derivative(k, g)));
    EXPECT_EQ(poly_derivative(k, poly_mul(k, f, g)),
              poly_add(k, poly_mul(k, poly_derivative(k, f), g), poly_mul(k, f, poly_derivative(k, g))));
    const KPoly h = poly_gcd(k, poly_mul(k, f, g), poly_mul(k, f, f));
    EXPECT_TRUE(h.coeffs.back().is_one());
    EXPECT_TRUE(poly_divmod(k, poly_mul(k, f, g), h).second.is_zero());
    EXPECT_TRUE(poly_divmod(k, poly_mul(k, f, f), h).second.is_zero());
    EXPECT_TRUE(poly_divmod(k, h, f).second.is_zero());  // f divides gcd(fg, f^2)
  }
}

TEST(UniPolyProperties, SeparablePresentationRecoversGeneratedInputs) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    const BaseField k = make_base(p, {"x"});
    for (int i = 0; i < 25; ++i) {
      KPoly fsep;
      do {
        fsep = random_poly(k, rng, 3);
      } while (!is_separable_poly(k, fsep));
      const unsigned n = static_cast<unsigned>(i % 3);
      const KPoly f = expand_presentation(k, SeparablePresentation<BaseField>{fsep, n});
      auto sp = separable_presentation(k, f);
      EXPECT_EQ(sp.n, n);
      EXPECT_EQ(sp.f_sep, fsep);
      EXPECT_EQ(expand_presentation(k, sp), f);
      long pn = 1;
      for (unsigned j = 0; j < n; ++j) pn *= p;
      EXPECT_EQ(f.degree(), pn * fsep.degree());
    }
  }
}

TEST(UniPoly, TextRoundTrip) {
  const BaseField k = make_base(3, {"x", "y"});
  const KPoly f = parse_poly(k, "(x + 1)/y*t^3 + 2*t + x^2*y");
  EXPECT_EQ(parse_poly(k, poly_to_string(k, f)), f);
}
