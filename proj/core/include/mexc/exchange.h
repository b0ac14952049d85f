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

#ifndef MEXC_EXCHANGE_H_
#define MEXC_EXCHANGE_H_

#include <optional>
#include <string_view>

#include "mexc/ext_value.h"
#include "mexc/set_function.h"
#include "mexc/subset.h"
#include "mexc/verdict.h"

namespace mexc {

// Controls how quantifier sweeps are run. Results, including witnesses, do
// not depend on the thread count: workers reduce to the smallest failing
// tuple in scan order.
struct SweepOptions {
  int threads = 1;
};

// Quantified tuples are scanned in increasing bitset order: X outermost,
// then Y, then i (or I). The first violation in that order is reported.

// (M♮-EXC): for all X, Y and i in X \ Y,
//   f(X) + f(Y) <= max[ f(X-i) + f(Y+i), max_{j in Y\X} f(X-i+j) + f(Y+i-j) ].
// Witness: sets X, Y; element i; lhs and the best right-hand value.
Verdict CheckSingleExchange(const SetFunction& f,
                            const SweepOptions& options = {});

struct ExchangeCertificate {
  Subset j_set;
  ExtValue lhs;  // f(X) + f(Y)
  ExtValue rhs;  // f((X \ I) ∪ J) + f((Y \ J) ∪ I)
};

// Smallest J ⊆ Y \ X (by |J|, then by bitset) with
// f(X) + f(Y) <= f((X \ I) ∪ J) + f((Y \ J) ∪ I), if any.
// Throws PreconditionError unless X, Y in dom f and I ⊆ X \ Y.
std::optional<ExchangeCertificate> FindExchangeSet(const SetFunction& f,
                                                   Subset x, Subset y,
                                                   Subset i);

// max over J ⊆ Y \ X of f((X \ I) ∪ J) + f((Y \ J) ∪ I). Same preconditions
// as FindExchangeSet.
ExtValue BestExchangeValue(const SetFunction& f, Subset x, Subset y,
                           Subset i);

// (M♮-EXC_m) over X, Y in dom f and I ⊆ X \ Y.
// Witness: sets X, Y, I; lhs and the best right-hand value.
Verdict CheckMultipleExchange(const SetFunction& f,
                              const SweepOptions& options = {});

// Equal cardinality of dom f, then for all X, Y, i in X \ Y:
//   f(X) + f(Y) <= max_{j in Y\X} f(X-i+j) + f(Y+i-j).
Verdict CheckValuatedMatroid(const SetFunction& f,
                             const SweepOptions& options = {});

// Local characterization: dom f satisfies (B♮-EXC) and the three local
// inequality families hold for every X and distinct i, j, k, l outside X:
//   (i)   f(X+i+j) + f(X) <= f(X+i) + f(X+j)
//   (ii)  f(X+i+j) + f(X+k) <= max[f(X+i+k) + f(X+j), f(X+j+k) + f(X+i)]
//   (iii) f(X+i+j) + f(X+k+l) <= max[f(X+i+k) + f(X+j+l),
//                                    f(X+j+k) + f(X+i+l)]
// The domain condition is checked first, then (i), (ii), (iii).
Verdict CheckLocal(const SetFunction& f, const SweepOptions& options = {});

// For X, Y in argmax f and I ⊆ X \ Y, the smallest J ⊆ Y \ X (by |J|, then
// bitset) with (X \ I) ∪ J and (Y \ J) ∪ I both maximizers, if any.
// Throws PreconditionError when X or Y is not a maximizer.
std::optional<Subset> MaximizerExchange(const SetFunction& f, Subset x,
                                        Subset y, Subset i);

enum class FamilyAxiom {
  kExchange,          // (B♮-EXC)
  kMultipleExchange,  // (B♮-EXC_m)
  kPlusMinus,         // (B♮-EXC±)
};

std::string_view AxiomName(FamilyAxiom axiom);

// Throws InputError on an empty family. A pass of kExchange means F is a
// generalized matroid.
Verdict CheckFamily(const SetFamily& family, FamilyAxiom axiom,
                    const SweepOptions& options = {});

// Smallest J ⊆ Y \ X (by |J|, then bitset) with (X \ I) ∪ J and (Y \ J) ∪ I
// both in F. Throws PreconditionError unless X, Y in F and I ⊆ X \ Y.
std::optional<Subset> FindBaseExchange(const SetFamily& family, Subset x,
                                       Subset y, Subset i);

}  // namespace mexc

#endif  // MEXC_EXCHANGE_H_
