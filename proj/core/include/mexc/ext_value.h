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

#ifndef MEXC_EXT_VALUE_H_
#define MEXC_EXT_VALUE_H_

#include <compare>
#include <optional>
#include <string>

#include "mexc/rational.h"

namespace mexc {

// An element of Q ∪ {-inf}.
//
// -inf absorbs addition, -inf <= -inf, and -inf is below every finite value.
// A default-constructed ExtValue is -inf, which is also the maximum of an
// empty collection.
class ExtValue {
 public:
  constexpr ExtValue() = default;
  ExtValue(Rational value) : value_(value) {}  // NOLINT
  ExtValue(std::int64_t value) : value_(Rational(value)) {}  // NOLINT

  static ExtValue NegInf() { return ExtValue(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_neg_inf() const { return !value_.has_value(); }

  // Throws InputError on -inf.
  const Rational& value() const;

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  // Shifting by a finite amount; -inf stays -inf.
  friend ExtValue operator-(const ExtValue& a, const Rational& b);

  friend bool operator==(const ExtValue& a, const ExtValue& b) = default;
  friend std::strong_ordering operator<=>(const ExtValue& a,
                                          const ExtValue& b);

  // "-inf", "p" or "p/q".
  std::string ToString() const;

 private:
  std::optional<Rational> value_;
};

inline ExtValue Max(const ExtValue& a, const ExtValue& b) {
  return a < b ? b : a;
}

}  // namespace mexc

#endif  // MEXC_EXT_VALUE_H_
