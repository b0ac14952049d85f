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

#include "mexc/set_function.h"

#include <algorithm>
#include <string>

#include "mexc/errors.h"
#include "scaled.h"

namespace mexc {

Rational PriceVector::Sum(Subset s) const {
  Rational total;
  ForEachElement(s, [&](int e) { total += entries_.at(e); });
  return total;
}

Rational PriceVector::AbsSum() const {
  Rational total;
  for (const Rational& r : entries_) total += Abs(r);
  return total;
}

PriceVector operator+(const PriceVector& a, const PriceVector& b) {
  if (a.size() != b.size()) throw InputError("price vector length mismatch");
  std::vector<Rational> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return PriceVector(std::move(out));
}

PriceVector operator-(const PriceVector& p) {
  std::vector<Rational> out(p.size());
  for (int i = 0; i < p.size(); ++i) out[i] = -p[i];
  return PriceVector(std::move(out));
}

PriceVector Join(const PriceVector& a, const PriceVector& b) {
  if (a.size() != b.size()) throw InputError("price vector length mismatch");
  std::vector<Rational> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return PriceVector(std::move(out));
}

PriceVector Meet(const PriceVector& a, const PriceVector& b) {
  if (a.size() != b.size()) throw InputError("price vector length mismatch");
  std::vector<Rational> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return PriceVector(std::move(out));
}

void CheckSubset(Subset s, int n, const char* what) {
  if (!IsSubsetOf(s, FullSet(n))) {
    throw InputError(std::string(what) + " " + FormatSubset(s) +
                     " is not a subset of the ground set 1.." +
                     std::to_string(n));
  }
}

SetFunction::SetFunction(int n, std::span<const ExtValue> table) : n_(n) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw InputError("ground set size must be in 1.." +
                     std::to_string(kMaxGroundSetSize) + ", got " +
                     std::to_string(n));
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw InputError("set function table must have 2^n entries");
  }
  for (const ExtValue& v : table) {
    if (v.is_finite()) {
      denominator_ = CheckedLcm(denominator_, v.value().den());
    }
  }
  scaled_.resize(table.size(), kNegInfScaled);
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (table[s].is_neg_inf()) continue;
    const Rational& r = table[s].value();
    __int128 v = __int128{r.num()} * (denominator_ / r.den());
    if (v <= kNegInfScaled || v > std::numeric_limits<std::int64_t>::max()) {
      throw OverflowError("set function value out of range after scaling");
    }
    scaled_[s] = static_cast<std::int64_t>(v);
    domain_.push_back(static_cast<Subset>(s));
  }
  if (domain_.empty()) {
    throw InputError("set function has empty effective domain");
  }
}

ExtValue SetFunction::Eval(Subset s) const {
  CheckSubset(s, n_, "subset");
  if (scaled_[s] == kNegInfScaled) return ExtValue::NegInf();
  return Rational(scaled_[s], denominator_);
}

Rational SetFunction::MaxValue() const {
  std::int64_t best = scaled_[domain_.front()];
  for (Subset s : domain_) best = std::max(best, scaled_[s]);
  return Rational(best, denominator_);
}

Rational SetFunction::MinFiniteValue() const {
  std::int64_t best = scaled_[domain_.front()];
  for (Subset s : domain_) best = std::min(best, scaled_[s]);
  return Rational(best, denominator_);
}

std::vector<ExtValue> SetFunction::Table() const {
  std::vector<ExtValue> out(scaled_.size());
  for (Subset s : domain_) out[s] = Rational(scaled_[s], denominator_);
  return out;
}

bool operator==(const SetFunction& a, const SetFunction& b) {
  return a.n_ == b.n_ && a.denominator_ == b.denominator_ &&
         a.scaled_ == b.scaled_;
}

SetFamily::SetFamily(int n, std::span<const Subset> members) : n_(n) {
  if (n < 0 || n > kMaxGroundSetSize) {
    throw InputError("ground set size must be in 0.." +
                     std::to_string(kMaxGroundSetSize));
  }
  member_.assign(std::size_t{1} << n, 0);
  for (Subset s : members) {
    CheckSubset(s, n, "family member");
    member_[s] = 1;
  }
  for (std::size_t s = 0; s < member_.size(); ++s) {
    if (member_[s]) members_.push_back(static_cast<Subset>(s));
  }
}

Subset SlicePair::Expand(Subset local) const {
  Subset out = 0;
  ForEachElement(local, [&](int k) { out |= Bit(y0_elements[k]); });
  return out;
}

ExtValue SlicePair::PrimalValue() const {
  ExtValue best = ExtValue::NegInf();
  for (std::size_t j = 0; j < f1.size(); ++j) best = Max(best, f1[j] + f2[j]);
  return best;
}

SetFamily EffectiveDomain(const SetFunction& f) {
  return SetFamily(f.n(), f.domain());
}

SetFunction ShiftByPrice(const SetFunction& f, const PriceVector& p) {
  internal::CheckLength(f, p);
  std::int64_t denominator = internal::CommonDenominator(f, p);
  std::vector<internal::Wide> shifted =
      internal::ShiftedTable(f, p, denominator);
  std::vector<ExtValue> table(shifted.size());
  for (std::size_t s = 0; s < shifted.size(); ++s) {
    table[s] = internal::ToExtValue(shifted[s], denominator);
  }
  return SetFunction(f.n(), table);
}

SlicePair Slice(const SetFunction& f, Subset x, Subset y, Subset i) {
  CheckSubset(x, f.n(), "X");
  CheckSubset(y, f.n(), "Y");
  CheckSubset(i, f.n(), "I");
  if (!f.InDomain(x) || !f.InDomain(y)) {
    throw PreconditionError("X and Y must belong to dom f");
  }
  if (!IsSubsetOf(i, x & ~y)) {
    throw PreconditionError("I must be a subset of X \\ Y");
  }
  SlicePair slice;
  slice.x = x;
  slice.y = y;
  slice.i = i;
  const Subset common = x & y;
  const Subset x0 = x & ~common;
  slice.y0 = y & ~common;
  ForEachElement(slice.y0, [&](int e) { slice.y0_elements.push_back(e); });
  const std::size_t size = std::size_t{1} << slice.dimension();
  slice.f1.resize(size);
  slice.f2.resize(size);
  for (Subset local = 0; local < size; ++local) {
    Subset j = slice.Expand(local);
    slice.f1[local] = f.Eval((x0 & ~i) | common | j);
    slice.f2[local] = f.Eval(i | common | (slice.y0 & ~j));
  }
  return slice;
}

namespace internal {

void CheckLength(const SetFunction& f, const PriceVector& p) {
  if (p.size() != f.n()) {
    throw InputError("price vector has " + std::to_string(p.size()) +
                     " entries, expected " + std::to_string(f.n()));
  }
}

std::int64_t CommonDenominator(const SetFunction& f, const PriceVector& p) {
  std::int64_t d = f.denominator();
  for (const Rational& r : p.entries()) d = CheckedLcm(d, r.den());
  return d;
}

std::vector<Wide> ScalePrices(const PriceVector& p, std::int64_t denominator) {
  std::vector<Wide> out(p.size());
  for (int e = 0; e < p.size(); ++e) {
    out[e] = Wide{p[e].num()} * (denominator / p[e].den());
  }
  return out;
}

std::vector<Wide> ShiftedTable(const SetFunction& f, const PriceVector& p,
                               std::int64_t denominator) {
  std::vector<Wide> prices = ScalePrices(p, denominator);
  std::vector<Wide> price_sum(f.table_size(), 0);
  std::vector<Wide> out(f.table_size(), kWideNegInf);
  for (Subset s = 1; s < f.table_size(); ++s) {
    price_sum[s] = price_sum[s & (s - 1)] + prices[std::countr_zero(s)];
  }
  for (Subset s : f.domain()) {
    out[s] = ScaledValue(f, s, denominator) - price_sum[s];
  }
  return out;
}

}  // namespace internal
}  // namespace mexc
