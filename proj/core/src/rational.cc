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

#include "mexc/rational.h"

#include <charconv>
#include <limits>
#include <numeric>

#include "mexc/errors.h"

namespace mexc {
namespace {

using Wide = __int128;

constexpr Wide kMin = std::numeric_limits<std::int64_t>::min();
constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();

Wide WideAbs(Wide v) { return v < 0 ? -v : v; }

Wide WideGcd(Wide a, Wide b) {
  a = WideAbs(a);
  b = WideAbs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t ParseInt(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("not an exact integer or \"p/q\" rational: '" +
                     std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  *this = FromWide(num, den);
}

Rational Rational::FromWide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = WideGcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num < kMin || num > kMax || den > kMax) {
    throw OverflowError("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::Parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(text));
  std::int64_t num = ParseInt(text.substr(0, slash));
  std::int64_t den = ParseInt(text.substr(slash + 1));
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(num, den);
}

std::int64_t Rational::Floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::operator-() const { return FromWide(-Wide{num_}, den_); }

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == 1 && other.den_ == 1) {
    return *this = FromWide(Wide{num_} + other.num_, 1);
  }
  return *this = FromWide(Wide{num_} * other.den_ + Wide{other.num_} * den_,
                          Wide{den_} * other.den_);
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  return *this = FromWide(Wide{num_} * other.num_, Wide{den_} * other.den_);
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw InputError("division by zero");
  return *this = FromWide(Wide{num_} * other.den_, Wide{den_} * other.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide{a.num_} * b.den_;
  Wide rhs = Wide{b.num_} * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Abs(const Rational& r) { return r < 0 ? -r : r; }

std::int64_t CheckedLcm(std::int64_t a, std::int64_t b) {
  Wide l = Wide{a} / std::gcd(a, b) * b;
  if (l > kMax) throw OverflowError("common denominator overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace mexc
