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

#ifndef MEXC_SET_FUNCTION_H_
#define MEXC_SET_FUNCTION_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mexc/ext_value.h"
#include "mexc/rational.h"
#include "mexc/subset.h"

namespace mexc {

// A price (or weight) per ground-set element.
class PriceVector {
 public:
  PriceVector() = default;
  explicit PriceVector(std::vector<Rational> entries)
      : entries_(std::move(entries)) {}

  static PriceVector Zero(int n) {
    return PriceVector(std::vector<Rational>(n));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  // p(S) = sum of p_i over i in S.
  Rational Sum(Subset s) const;
  // Sum of |p_i|.
  Rational AbsSum() const;

  friend PriceVector operator+(const PriceVector& a, const PriceVector& b);
  friend PriceVector operator-(const PriceVector& p);
  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  std::vector<Rational> entries_;
};

// Componentwise max / min.
PriceVector Join(const PriceVector& a, const PriceVector& b);
PriceVector Meet(const PriceVector& a, const PriceVector& b);

// f : 2^N -> Q ∪ {-inf} stored as a dense table indexed by subset bitset.
//
// Internally every finite value is kept as an integer over one common
// denominator, so the exchange checkers compare plain integers. The public
// surface speaks ExtValue.
class SetFunction {
 public:
  static constexpr std::int64_t kNegInfScaled =
      std::numeric_limits<std::int64_t>::min();

  // Requires 1 <= n <= 20, table.size() == 2^n and at least one finite
  // entry; throws InputError otherwise.
  SetFunction(int n, std::span<const ExtValue> table);

  int n() const { return n_; }
  Subset ground_set() const { return FullSet(n_); }
  std::size_t table_size() const { return scaled_.size(); }

  // Throws InputError if s is not a subset of the ground set.
  ExtValue Eval(Subset s) const;
  bool InDomain(Subset s) const { return scaled_[s] != kNegInfScaled; }

  // f(S) * denominator() as an integer, or kNegInfScaled.
  std::int64_t scaled(Subset s) const { return scaled_[s]; }
  std::int64_t denominator() const { return denominator_; }

  // dom f in increasing bitset order.
  std::span<const Subset> domain() const { return domain_; }

  Rational MaxValue() const;
  Rational MinFiniteValue() const;
  // max finite f - min finite f.
  Rational ValueRange() const { return MaxValue() - MinFiniteValue(); }

  std::vector<ExtValue> Table() const;

  friend bool operator==(const SetFunction& a, const SetFunction& b);

 private:
  int n_;
  std::int64_t denominator_ = 1;
  std::vector<std::int64_t> scaled_;
  std::vector<Subset> domain_;
};

// A family F ⊆ 2^N given by its membership table.
class SetFamily {
 public:
  SetFamily(int n, std::span<const Subset> members);

  int n() const { return n_; }
  bool Contains(Subset s) const { return s < member_.size() && member_[s]; }
  std::span<const Subset> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_;
  std::vector<std::uint8_t> member_;
  std::vector<Subset> members_;
};

// The restrictions of f used to rewrite the multiple exchange inequality for
// fixed (X, Y, I) as a maximization over J ⊆ Y0 = Y \ X:
//   f1(J) = f((X \ I) ∪ J),   f2(J) = f((Y \ J) ∪ I).
// Slice tables are indexed by a local bitset over Y0: local bit k stands for
// the k-th smallest element of Y0.
struct SlicePair {
  Subset x;
  Subset y;
  Subset i;
  Subset y0;
  std::vector<int> y0_elements;  // 0-based, increasing
  std::vector<ExtValue> f1;
  std::vector<ExtValue> f2;

  int dimension() const { return static_cast<int>(y0_elements.size()); }
  // Local subset of Y0 -> subset of N.
  Subset Expand(Subset local) const;
  // max over J of f1(J) + f2(J).
  ExtValue PrimalValue() const;
};

// dom f as a family.
SetFamily EffectiveDomain(const SetFunction& f);

// f[-p](X) = f(X) - p(X). Throws InputError on a length mismatch.
SetFunction ShiftByPrice(const SetFunction& f, const PriceVector& p);

// Requires X, Y in dom f and I ⊆ X \ Y; throws PreconditionError otherwise.
SlicePair Slice(const SetFunction& f, Subset x, Subset y, Subset i);

// Validates that s is a subset of the ground set of size n.
void CheckSubset(Subset s, int n, const char* what);

}  // namespace mexc

#endif  // MEXC_SET_FUNCTION_H_
