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

#include "gvdt/tables.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

namespace gvdt {
namespace {

using testing::deg;

TEST(GVTableTest, SetGetAndPruning) {
  GVTable t{ClassBasis()};
  t.set(deg(1), 0, 3);
  t.set(deg(2), 1, -5);
  EXPECT_EQ(t.n(deg(1), 0), 3);
  EXPECT_EQ(t.n(deg(1), 1), 0);
  EXPECT_EQ(t.gmax(deg(2)), 1);
  EXPECT_EQ(t.gmax(deg(3)), -1);
  t.set(deg(2), 1, 0);  // zero entries vanish
  EXPECT_EQ(t.gmax(deg(2)), -1);
  EXPECT_EQ(t.max_degree(), 1);
}

TEST(GVTableTest, RejectsBadEntries) {
  GVTable t{ClassBasis()};
  EXPECT_THROW(t.set(deg(0), 0, 1), std::domain_error);
  EXPECT_THROW(t.set(deg(1), -1, 1), std::domain_error);
  EXPECT_THROW(t.set(CurveClass({1, 0}), 0, 1), std::invalid_argument);
}

TEST(GVTableTest, CanonicalWriteAndRead) {
  GVTable t{ClassBasis()};
  t.set(deg(3), 1, -10);
  t.set(deg(1), 0, 3);
  t.set(deg(1), 2, 4);
  std::string text = t.str();
  EXPECT_EQ(text,
            "rank 1\n"
            "weights 1\n"
            "beta=[1] g=0 n=3\n"
            "beta=[1] g=2 n=4\n"
            "beta=[3] g=1 n=-10\n");
  std::istringstream is(text);
  EXPECT_EQ(GVTable::read(is), t);
}

TEST(GVTableTest, WeightedRank2Ordering) {
  GVTable t{ClassBasis({1, 3})};
  t.set(CurveClass({0, 1}), 0, 1);  // degree 3
  t.set(CurveClass({2, 0}), 0, 1);  // degree 2
  auto classes = t.classes_by_degree();
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0], CurveClass({2, 0}));
  std::istringstream is(t.str());
  EXPECT_EQ(GVTable::read(is), t);
}

TEST(GVTableTest, ReadErrorsCarryLineNumbers) {
  std::istringstream missing_header("beta=[1] g=0 n=1\n");
  EXPECT_THROW(GVTable::read(missing_header), std::runtime_error);

  std::istringstream bad_entry("rank 1\nweights 1\nbeta=[1] g=0 n=abc\n");
  try {
    GVTable::read(bad_entry);
    FAIL() << "expected parse error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }

  std::istringstream bad_weights("rank 2\nweights 1\n");
  EXPECT_THROW(GVTable::read(bad_weights), std::runtime_error);
}

TEST(GVTableTest, CommentsAreSkipped) {
  std::istringstream is("# a note\nrank 1\nweights 1\n# another\nbeta=[2] g=0 n=-6\n");
  GVTable t = GVTable::read(is);
  EXPECT_EQ(t.n(deg(2), 0), -6);
}

TEST(GWTableTest, RationalEntriesAndKnownRange) {
  GWTable t{ClassBasis()};
  t.set(deg(1), 0, Rational(1));
  t.set(deg(2), 0, Rational(1, 8));
  EXPECT_EQ(t.N(deg(2), 0), Rational(1, 8));
  EXPECT_EQ(t.known_genus(), 0);
  EXPECT_EQ(t.known_degree(), 2);
  t.declare_known(3, 5);
  EXPECT_EQ(t.known_genus(), 3);
  EXPECT_EQ(t.known_degree(), 5);
}

TEST(GWTableTest, WriteAndReadRoundtrip) {
  GWTable t{ClassBasis()};
  t.set(deg(1), 1, Rational(1, 12));
  t.set(deg(3), 0, Rational(1, 27));
  std::string text = t.str();
  EXPECT_EQ(text,
            "rank 1\n"
            "weights 1\n"
            "beta=[1] g=1 N=1/12\n"
            "beta=[3] g=0 N=1/27\n");
  std::istringstream is(text);
  EXPECT_EQ(GWTable::read(is), t);
}

}  // namespace
}  // namespace gvdt
