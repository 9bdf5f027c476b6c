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

#include "gvdt/partitions.hpp"

#include <gtest/gtest.h>

#include <thread>

#include "gvdt/multiseries.hpp"
#include "test_support.hpp"

namespace gvdt {
namespace {

using testing::deg;

TEST(PartitionCountTest, SmallValues) {
  EXPECT_EQ(partition_count(0), 1);
  EXPECT_EQ(partition_count(5), 7);    // enumeration: 5,41,32,311,221,2111,11111
  EXPECT_EQ(partition_count(10), 42);  // frozen from the enumeration oracle
  EXPECT_THROW(partition_count(-1), std::domain_error);
}

TEST(PartitionOracleTest, FrozenValues) {
  EXPECT_EQ(partition_count_oracle(1), 1);
  EXPECT_EQ(partition_count_oracle(6), 11);
  EXPECT_EQ(partition_count_oracle(12), 77);
  EXPECT_THROW(partition_count_oracle(41), std::domain_error);
}

TEST(PartitionOracleTest, RecurrenceMatchesEnumeration) {
  for (long k = 0; k <= 25; ++k) EXPECT_EQ(partition_count(k), partition_count_oracle(k));
}

TEST(PlanePartitionOracleTest, SmallValues) {
  EXPECT_EQ(plane_partition_oracle(0), 1);
  EXPECT_EQ(plane_partition_oracle(1), 1);
  EXPECT_EQ(plane_partition_oracle(2), 3);   // {2}, {1,1}, {1;1}
  EXPECT_EQ(plane_partition_oracle(4), 13);  // frozen from the enumeration
  EXPECT_THROW(plane_partition_oracle(13), std::domain_error);
}

TEST(McmahonTest, MatchesPlanePartitionOracleThroughTwelve) {
  QLaurent m = mcmahon_series(12, +1);
  for (int n = 0; n <= 12; ++n)
    EXPECT_EQ(m.at(n), Rational(plane_partition_oracle(n))) << "n=" << n;
}

TEST(McmahonTest, FirstCoefficients) {
  QLaurent m = mcmahon_series(4, +1);
  EXPECT_EQ(m.at(0), Rational(1));
  EXPECT_EQ(m.at(1), Rational(1));
  EXPECT_EQ(m.at(2), Rational(3));
  EXPECT_EQ(m.at(3), Rational(6));
  EXPECT_EQ(m.at(4), Rational(13));
  EXPECT_EQ(m.known_to(), 4);
}

TEST(McmahonTest, SignedArgument) {
  QLaurent m = mcmahon_series(3, -1);
  EXPECT_EQ(m.at(0), Rational(1));
  EXPECT_EQ(m.at(1), Rational(-1));
  EXPECT_EQ(m.at(2), Rational(3));
  EXPECT_EQ(m.at(3), Rational(-6));
}

TEST(McmahonTest, SingleFactorTruncation) {
  QLaurent m = mcmahon_series(1, +1);
  EXPECT_EQ(m.at(0), Rational(1));
  EXPECT_EQ(m.at(1), Rational(1));
}

TEST(McmahonTest, ParityOfWeight) {
  QLaurent plus = mcmahon_series(10, +1);
  QLaurent minus = mcmahon_series(10, -1);
  for (int n = 0; n <= 10; ++n) {
    Rational expected = plus.at(n);
    if (n % 2 == 1) expected = -expected;
    EXPECT_EQ(minus.at(n), expected);
  }
}

TEST(McmahonTest, BadArgumentsThrow) {
  EXPECT_THROW(mcmahon_series(0, +1), std::domain_error);
  EXPECT_THROW(mcmahon_series(3, 2), std::domain_error);
}

TEST(PartitionCountTest, ConcurrentCallsAgree) {
  std::vector<Integer> results(8);
  std::vector<std::thread> workers;
  workers.reserve(results.size());
  for (size_t i = 0; i < results.size(); ++i)
    workers.emplace_back([&results, i] { results[i] = partition_count(30); });
  for (auto& w : workers) w.join();
  for (const Integer& r : results) EXPECT_EQ(r, 5604);
}

TEST(PartitionGeneratingFunctionTest, EulerProductToDegreeTwenty) {
  // prod_{k<=20} (1 - t^k)^{-1} carries p(k) at t^k.
  ClassBasis basis;
  QWindow win{0, 2};
  MultiSeries z = MultiSeries::one(basis, 20, win);
  for (long k = 1; k <= 20; ++k) {
    MultiSeries u = MultiSeries::monomial(basis, 20, win, deg(k), 0, Rational(-1));
    z = series_mul(z, binom_power(u, -1));
  }
  for (long k = 0; k <= 20; ++k)
    EXPECT_EQ(z.term(deg(k)).at(0), Rational(partition_count(k))) << "k=" << k;
}

}  // namespace
}  // namespace gvdt
