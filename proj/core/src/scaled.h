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

// Integer views of f[-p] over a common denominator. Internal to mexc_core.

#ifndef MEXC_SRC_SCALED_H_
#define MEXC_SRC_SCALED_H_

#include <cstdint>
#include <vector>

#include "mexc/ext_value.h"
#include "mexc/rational.h"
#include "mexc/set_function.h"

namespace mexc::internal {

using Wide = __int128;

// Far below any sum of a handful of scaled values.
inline constexpr Wide kWideNegInf = -(Wide{1} << 120);

inline bool IsNegInf(Wide v) { return v <= kWideNegInf; }

inline Wide AddExt(Wide a, Wide b) {
  return (IsNegInf(a) || IsNegInf(b)) ? kWideNegInf : a + b;
}

// lcm of f's denominator and every price denominator.
std::int64_t CommonDenominator(const SetFunction& f, const PriceVector& p);

// p_i * denominator for every i. Requires denominator to be a multiple of
// every p_i's denominator.
std::vector<Wide> ScalePrices(const PriceVector& p, std::int64_t denominator);

// f(S) * denominator, or kWideNegInf.
inline Wide ScaledValue(const SetFunction& f, Subset s,
                        std::int64_t denominator) {
  if (!f.InDomain(s)) return kWideNegInf;
  return Wide{f.scaled(s)} * (denominator / f.denominator());
}

// (f(S) - p(S)) * denominator for every S.
std::vector<Wide> ShiftedTable(const SetFunction& f, const PriceVector& p,
                               std::int64_t denominator);

inline ExtValue ToExtValue(Wide v, std::int64_t denominator) {
  if (IsNegInf(v)) return ExtValue::NegInf();
  return Rational::FromWide(v, denominator);
}

void CheckLength(const SetFunction& f, const PriceVector& p);

}  // namespace mexc::internal

#endif  // MEXC_SRC_SCALED_H_
