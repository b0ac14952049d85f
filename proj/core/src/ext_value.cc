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

#include "mexc/ext_value.h"

#include "mexc/errors.h"

namespace mexc {

const Rational& ExtValue::value() const {
  if (!value_) throw InputError("value of -inf requested");
  return *value_;
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtValue::NegInf();
  return *a.value_ + *b.value_;
}

ExtValue operator-(const ExtValue& a, const Rational& b) {
  if (a.is_neg_inf()) return a;
  return *a.value_ - b;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) {
    return a.is_finite() <=> b.is_finite();
  }
  return *a.value_ <=> *b.value_;
}

std::string ExtValue::ToString() const {
  return value_ ? value_->ToString() : "-inf";
}

}  // namespace mexc
