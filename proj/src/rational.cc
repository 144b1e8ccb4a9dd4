// Copyright 2026 The Mutascope Authors
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

#include "mutascope/rational.h"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <system_error>

namespace mutascope {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational Rational::FromDecimal(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&] {
    throw std::invalid_argument("not a decimal number: " + std::string(original));
  };
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const auto exp_text = text.substr(e + 1);
    const auto* begin = exp_text.data();
    const auto* end = begin + exp_text.size();
    if (!exp_text.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, exponent);
    if (ec != std::errc() || ptr != end) fail();
    text = text.substr(0, e);
  }
  std::int64_t num = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) fail();
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') fail();
    if (num > (INT64_MAX - 9) / 10) throw std::invalid_argument("decimal too precise");
    num = num * 10 + (c - '0');
    any_digit = true;
    if (seen_point) --exponent;
  }
  if (!any_digit) fail();
  std::int64_t den = 1;
  for (; exponent > 0; --exponent) {
    if (num > INT64_MAX / 10) throw std::invalid_argument("decimal too large");
    num *= 10;
  }
  for (; exponent < 0; ++exponent) {
    if (den > INT64_MAX / 10) throw std::invalid_argument("decimal too precise");
    den *= 10;
  }
  return Rational(negative ? -num : num, den);
}

Rational Rational::FromDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::invalid_argument("unrepresentable double");
  return FromDecimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t CeilMultiply(const Rational& factor, std::int64_t value) {
  const __int128 product = static_cast<__int128>(factor.num()) * value;
  const __int128 den = factor.den();
  __int128 q = product / den;
  if (product % den != 0 && product > 0) ++q;
  return static_cast<std::int64_t>(q);
}

}  // namespace mutascope
