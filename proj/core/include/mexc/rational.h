// Copyright 2026 The mexc Authors.
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

#ifndef MEXC_RATIONAL_H_
#define MEXC_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mexc {

// Exact rational number with 64-bit numerator and denominator.
//
// Values are always canonical: gcd(num, den) == 1 and den > 0. Every
// operation is computed in 128-bit intermediates and reduced; a result that
// does not fit back into 64 bits throws OverflowError instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  // Implicit so that integer literals compose naturally with rationals.
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p", "-p" or "p/q". Decimal points and exponents are rejected so
  // that no silent rounding can happen on input.
  static Rational Parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // Largest integer <= value.
  std::int64_t Floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "p" for integers, "p/q" otherwise.
  std::string ToString() const;

  // Reduces num / den computed in 128-bit arithmetic; throws OverflowError
  // when the reduced fraction does not fit 64 bits. den must be nonzero.
  static Rational FromWide(__int128 num, __int128 den);

 private:

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational Abs(const Rational& r);

// Least common multiple with overflow checking; both arguments positive.
std::int64_t CheckedLcm(std::int64_t a, std::int64_t b);

}  // namespace mexc

#endif  // MEXC_RATIONAL_H_
