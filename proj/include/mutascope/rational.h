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

#ifndef MUTASCOPE_RATIONAL_H_
#define MUTASCOPE_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace mutascope {

// Exact non-negative-denominator fraction, always stored reduced.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // Parses "1.25", "3", "2e-1", "-0.5" exactly. Throws std::invalid_argument.
  static Rational FromDecimal(std::string_view text);
  // Converts via the shortest decimal representation that round-trips.
  static Rational FromDouble(double value);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// ceil(factor * value) for value >= 0 and factor >= 0.
std::int64_t CeilMultiply(const Rational& factor, std::int64_t value);

}  // namespace mutascope

#endif  // MUTASCOPE_RATIONAL_H_
