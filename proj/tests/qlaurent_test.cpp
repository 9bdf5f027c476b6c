// Copyright 2026 The gvdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gvdt/qlaurent.hpp"

#include <gtest/gtest.h>

namespace gvdt {
namespace {

QLaurent make(std::map<int, Rational> c, int hi = kUnboundedExp) {
  return QLaurent(std::move(c), hi);
}

TEST(QLaurentTest, ZeroAndMonomial) {
  QLaurent z;
  EXPECT_TRUE(z.is_exactly_zero());
  EXPECT_EQ(z.at(100), Rational(0));
  QLaurent m = QLaurent::monomial(-2, Rational(3));
  EXPECT_EQ(m.at(-2), Rational(3));
  EXPECT_EQ(m.at(0), Rational(0));
  EXPECT_EQ(m.support_floor(), -2);
}

TEST(QLaurentTest, UnknownCoefficientThrows) {
  QLaurent f = make({{0, 1}, {1, 1}}, 3);
  EXPECT_EQ(f.at(3), Rational(0));
  EXPECT_THROW(f.at(4), std::domain_error);
  EXPECT_TRUE(f.knows(3));
  EXPECT_FALSE(f.knows(4));
}

TEST(QLaurentTest, NormalizationDropsZerosAndOutOfWindowKeys) {
  QLaurent f = make({{0, 1}, {1, 0}, {5, 7}}, 3);
  EXPECT_EQ(f.coeffs().size(), 1u);  // q^1 is zero, q^5 is beyond the window
  EXPECT_EQ(f.at(0), Rational(1));
}

TEST(QLaurentTest, AdditionIntersectsKnowledge) {
  QLaurent a = make({{0, 1}}, 5);
  QLaurent b = make({{1, 2}}, 3);
  QLaurent s = a + b;
  EXPECT_EQ(s.known_to(), 3);
  EXPECT_EQ(s.at(0), Rational(1));
  EXPECT_EQ(s.at(1), Rational(2));
}

TEST(QLaurentTest, CancellationGivesComputedZero) {
  QLaurent a = make({{2, 1}}, 8);
  QLaurent d = a - a;
  EXPECT_TRUE(d.empty());
  EXPECT_FALSE(d.is_exactly_zero());
  EXPECT_EQ(d.known_to(), 8);
  EXPECT_EQ(d.support_floor(), 9);  // nothing below q^9 can be nonzero
}

TEST(QLaurentTest, MultiplicationContamination) {
  // Known to q^5 times an exact polynomial starting at q^0: still q^5.
  QLaurent a = make({{0, 1}, {1, 1}}, 5);
  QLaurent b = make({{0, 1}, {1, -1}});
  EXPECT_EQ((a * b).known_to(), 5);
  // A factor with negative support shifts the reliable range down.
  QLaurent c = make({{-2, 1}});
  EXPECT_EQ((a * c).known_to(), 3);
  EXPECT_EQ((a * c).at(-2), Rational(1));
  // Exact times exact stays exact.
  EXPECT_TRUE((b * c).is_exact());
}

TEST(QLaurentTest, GeometricTruncationExample) {
  // (1 + q + ... + q^5) * (1 - q) = 1 - q^6 -> 1 at window qmax = 5.
  std::map<int, Rational> geo;
  for (int k = 0; k <= 5; ++k) geo.emplace(k, 1);
  QLaurent a = make(std::move(geo), 5);
  QLaurent b = make({{0, 1}, {1, -1}});
  QLaurent prod = a * b;
  EXPECT_EQ(prod, make({{0, 1}}, 5));
}

TEST(QLaurentTest, MultiplyByExactZero) {
  QLaurent a = make({{0, 1}}, 5);
  EXPECT_TRUE((a * QLaurent()).is_exactly_zero());
}

TEST(QLaurentTest, ShiftAndScale) {
  QLaurent f = make({{0, 1}, {2, 3}}, 4);
  QLaurent s = f.shifted(-2);
  EXPECT_EQ(s.at(-2), Rational(1));
  EXPECT_EQ(s.at(0), Rational(3));
  EXPECT_EQ(s.known_to(), 2);
  EXPECT_EQ(f.scaled(Rational(1, 3)).at(2), Rational(1));
  EXPECT_TRUE(f.scaled(Rational(0)).is_exactly_zero());
}

TEST(QLaurentTest, AgreesWithComparesCommonWindow) {
  QLaurent a = make({{0, 1}, {1, 2}}, 1);
  QLaurent b = make({{0, 1}, {1, 2}, {2, 9}}, 2);
  EXPECT_TRUE(a.agrees_with(b));
  QLaurent c = make({{0, 1}, {1, 3}}, 1);
  EXPECT_FALSE(a.agrees_with(c));
}

TEST(PowerSeriesTest, ExpLogInverse) {
  std::vector<Rational> f{Rational(0), Rational(1), Rational(1, 2), Rational(-3)};
  std::vector<Rational> e = ps_exp(f);
  EXPECT_EQ(e[0], Rational(1));
  std::vector<Rational> back = ps_log(e);
  for (size_t i = 0; i < f.size(); ++i) EXPECT_EQ(back[i], f[i]);
}

TEST(PowerSeriesTest, KnownExpansion) {
  // exp(q) = 1 + q + q^2/2 + q^3/6
  std::vector<Rational> f{Rational(0), Rational(1), Rational(0), Rational(0)};
  std::vector<Rational> e = ps_exp(f);
  EXPECT_EQ(e[2], Rational(1, 2));
  EXPECT_EQ(e[3], Rational(1, 6));
  EXPECT_THROW(ps_exp({Rational(1)}), std::domain_error);
  EXPECT_THROW(ps_log({Rational(2)}), std::domain_error);
}

}  // namespace
}  // namespace gvdt
