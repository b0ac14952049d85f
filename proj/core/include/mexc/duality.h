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

#ifndef MEXC_DUALITY_H_
#define MEXC_DUALITY_H_

#include <cstdint>
#include <optional>
#include <utility>

#include "mexc/ext_value.h"
#include "mexc/rational.h"
#include "mexc/set_function.h"
#include "mexc/verdict.h"

namespace mexc {

// g(p) = max_Z f(Z) - p(Z). Finite because dom f is nonempty.
Rational Conjugate(const SetFunction& f, const PriceVector& p);

// Checks g(p) + g(p2) >= g(p ∨ p2) + g(p ∧ p2) exactly. The witness carries
// both prices with lhs = g(p) + g(p2) and rhs = g(p ∨ p2) + g(p ∧ p2).
Verdict CheckSubmodularPair(const SetFunction& f, const PriceVector& p,
                            const PriceVector& p2);

// g1(q) = max_J f1(J) - q(J) and g2(-q) = max_J f2(J) + q(J), with q indexed
// like the slice's local bits. Either is -inf when the slice is -inf
// everywhere.
std::pair<ExtValue, ExtValue> SliceConjugates(const SlicePair& slice,
                                              const PriceVector& q);

// g1(q) + g2(-q).
ExtValue DualObjective(const SlicePair& slice, const PriceVector& q);

struct DualSearchOptions {
  // Half-width of the integer search box in value units. Defaults to
  // 2 * (max finite f - min finite f) + 1 measured after scaling f to
  // integers.
  std::optional<Rational> box_radius;
  // Refuse an exhaustive sweep over more points than this.
  std::uint64_t max_box_points = 10'000'000;
};

struct DualityReport {
  ExtValue primal;  // max_J f1(J) + f2(J)
  ExtValue dual;    // smallest g1(q) + g2(-q) over the box
  // A dual minimizer attaining the primal value; set iff the gap is zero.
  std::optional<PriceVector> q_star;
  // dual - primal. Empty when the primal is -inf but the dual is finite.
  std::optional<Rational> gap;
  // Box actually searched, in value units.
  Rational box_radius;
  // Number of dual points evaluated.
  std::int64_t visited = 0;
  // True when the whole box had to be swept.
  bool exhaustive = false;

  bool zero_gap() const { return gap.has_value() && *gap == 0; }
};

// Compares max_J f1(J) + f2(J) with min_q g1(q) + g2(-q) over integer q
// (in units of 1 / f.denominator()) inside the box. Weak duality is asserted
// at every visited point; a violation throws InvariantError.
//
// The search first descends from q = 0 along ±1 steps on coordinate subsets
// and stops as soon as the dual value meets the primal value (which is then
// the box minimum by weak duality). Otherwise it sweeps the whole box.
DualityReport FenchelGap(const SetFunction& f, Subset x, Subset y, Subset i,
                         const DualSearchOptions& options = {});

struct BigMPair {
  Rational m_value;
  PriceVector p1;
  PriceVector p2;
};

// 2 * (max finite f - min finite f) + sum |q_j| + 1.
Rational BigMThreshold(const SetFunction& f, const PriceVector& q);

// Builds the two price vectors over N that reduce g1(q) and g2(-q) to the
// conjugate g of f:
//                 Y0    X0\I    I     C    N\(X∪Y)
//   p1            q     -M     +M    -M      +M
//   p2            q     +M     -M    -M      +M
// and verifies
//   g1(q)  = g(p1) - M(|X0\I| + |C|)
//   g2(-q) = g(p2) - M(|I| + |C|) + q(Y0)
//   g(p1 ∨ p2) >= f(Y) - q(Y0) + M|C|
//   g(p1 ∧ p2) >= f(X) + M|X|
// M defaults to BigMThreshold(f, q); a smaller explicit M is an InputError.
// Requires X, Y in dom f, I ⊆ X \ Y, |q| = |Y \ X| and both slices having a
// finite value (PreconditionError otherwise). A failed relation throws
// InvariantError.
BigMPair BigMVectors(const SetFunction& f, Subset x, Subset y, Subset i,
                     const PriceVector& q,
                     std::optional<Rational> m_value = std::nullopt);

}  // namespace mexc

#endif  // MEXC_DUALITY_H_
