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

#include "slimap/rational.hpp"

#include "slimap/error.hpp"

#include <cctype>

namespace slimap {
namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  std::size_t start = 0;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
  if (start == digits.size()) throw Error(Errc::Parse, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw Error(Errc::Parse, "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string text(digits[0] == '+' ? digits.substr(1) : digits);
  return Integer(text);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(Errc::Parse, "sign belongs on the numerator in '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  if (denominator_of(value) == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

}  // namespace slimap
