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

#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace slimap {

/// Exact arbitrary-precision rational. Expression templates are disabled so
/// the type behaves like a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = VectorX<Rational>;
using QMatrix = MatrixX<Rational>;

/// Parses "p/q", "p" or "-p/q" into lowest terms. Throws Errc::Parse.
Rational parse_rational(std::string_view text);

/// Lowest terms with the sign on the numerator; integers print without "/1".
std::string to_string(const Rational& value);

inline Integer numerator_of(const Rational& value) { return boost::multiprecision::numerator(value); }
inline Integer denominator_of(const Rational& value) { return boost::multiprecision::denominator(value); }

/// Least common multiple of the denominators of all entries (1 for an empty range).
template <typename Range>
Integer lcm_of_denominators(const Range& values) {
  Integer acc = 1;
  for (const Rational& v : values) {
    acc = boost::multiprecision::lcm(acc, denominator_of(v));
  }
  return acc;
}

inline bool is_integer(const Rational& value) { return denominator_of(value) == 1; }

/// Constant vector helper, e.g. a capacity function C == c.
inline QVector constant_vector(Eigen::Index size, const Rational& value) {
  return QVector::Constant(size, value);
}

}  // namespace slimap
