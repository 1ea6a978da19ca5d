/*
 * Copyright 2026 The Schwarzmap Authors
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
 */

#include "schwarzmap/rational.hpp"

#include <gtest/gtest.h>

namespace schwarzmap {
namespace {

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(rational(4, 6), rational(2, 3));
  EXPECT_EQ(rational(3, -6), rational(-1, 2));
  EXPECT_GT(rational(3, -6).get_den(), 0);
  EXPECT_EQ(rational(0, 7), Rational(0));
  EXPECT_THROW(rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-11/432"), rational(-11, 432));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(parse_rational("10/4"), rational(5, 2));
  EXPECT_EQ(to_string(rational(5, 2)), "5/2");
  EXPECT_EQ(to_string(Rational(-7)), "-7");
  EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(Rational, Predicates) {
  EXPECT_TRUE(is_integer(rational(8, 4)));
  EXPECT_FALSE(is_integer(rational(1, 2)));
  EXPECT_TRUE(is_nonpositive_integer(Rational(0)));
  EXPECT_TRUE(is_nonpositive_integer(Rational(-3)));
  EXPECT_FALSE(is_nonpositive_integer(Rational(1)));
  EXPECT_FALSE(is_nonpositive_integer(rational(-1, 2)));
  EXPECT_TRUE(is_natural(Rational(1)));
  EXPECT_FALSE(is_natural(Rational(0)));
  EXPECT_EQ(to_long(Rational(42)), 42);
  EXPECT_THROW(to_long(rational(1, 2)), std::invalid_argument);
}

TEST(Pochhammer, BaseCases) {
  EXPECT_EQ(pochhammer(rational(5, 2), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(3), 4), Rational(360));
  EXPECT_EQ(pochhammer(Rational(-2), 4), Rational(0));
  EXPECT_EQ(pochhammer(rational(1, 2), 3), rational(15, 8));
}

TEST(Pochhammer, ZeroPredicate) {
  EXPECT_TRUE(pochhammer_is_zero(Rational(-2), 4));
  EXPECT_FALSE(pochhammer_is_zero(rational(1, 2), 100));
  EXPECT_FALSE(pochhammer_is_zero(Rational(-2), 2));
}

// The predicate must agree with the product on a half-integer grid.
TEST(Pochhammer, ZeroPredicateMatchesProductOnGrid) {
  for (long twice_a = -10; twice_a <= 10; ++twice_a) {
    const Rational a = rational(twice_a, 2);
    for (long n = 0; n <= 12; ++n) {
      EXPECT_EQ(pochhammer_is_zero(a, n), pochhammer(a, n) == 0)
          << "a = " << to_string(a) << ", n = " << n;
    }
  }
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_EQ(binomial(7, 3), Rational(35));
  EXPECT_EQ(binomial(7, 0), Rational(1));
  EXPECT_EQ(binomial(7, 8), Rational(0));
  EXPECT_EQ(binomial(7, -1), Rational(0));
}

TEST(Rational, Power) {
  EXPECT_EQ(pow_rational(rational(2, 3), 3), rational(8, 27));
  EXPECT_EQ(pow_rational(rational(2, 3), -2), rational(9, 4));
  EXPECT_EQ(pow_rational(rational(2, 3), 0), Rational(1));
  EXPECT_THROW(pow_rational(Rational(0), -1), std::invalid_argument);
}

}  // namespace
}  // namespace schwarzmap
