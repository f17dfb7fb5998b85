// Copyright 2026 The slimap Authors
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

#include "slimap/error.hpp"
#include "slimap/random_instances.hpp"
#include "slimap/rational.hpp"

#include <gtest/gtest.h>

namespace slimap {
namespace {

TEST(Rational, ParsesIntoLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_EQ(to_string(parse_rational("0/9")), "0");
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"), Rational(Integer("41152263004115226300411522630")));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "1.5", "a/b", "--1", "1//2", " 1"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::Parse) << bad;
    }
  }
}

TEST(Rational, LcmOfDenominators) {
  const std::vector<Rational> values{Rational(3, 2), Rational(5, 4)};
  EXPECT_EQ(lcm_of_denominators(values), 4);
  EXPECT_EQ(lcm_of_denominators(std::vector<Rational>{}), 1);
  EXPECT_EQ(lcm_of_denominators(std::vector<Rational>{Rational(1, 6), Rational(1, 10)}), 30);
}

TEST(Rational, PrintParseRoundTrip) {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const Rational x = rng.rational(-50, 50, 97);
    EXPECT_EQ(parse_rational(to_string(x)), x);
  }
}

TEST(Rational, EigenArithmeticIsExact) {
  QVector v = constant_vector(3, Rational(1, 3));
  EXPECT_EQ(v.sum(), 1);
  QMatrix m = QMatrix::Identity(3, 3) * Rational(1, 7);
  EXPECT_EQ((m * v)(2), Rational(1, 21));
}

TEST(Rng, DerivedSeedsAreStable) {
  EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.rational(-3, 3, 7), b.rational(-3, 3, 7));
}

}  // namespace
}  // namespace slimap
