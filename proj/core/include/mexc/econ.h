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

#ifndef MEXC_ECON_H_
#define MEXC_ECON_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mexc/exchange.h"
#include "mexc/rational.h"
#include "mexc/set_function.h"
#include "mexc/verdict.h"

namespace mexc {

// D(p | f) = argmax of f[-p].
struct DemandSet {
  PriceVector price;
  SetFamily members;
  Rational value;  // max of f[-p]
};

DemandSet Demand(const SetFunction& f, const PriceVector& p);

// Deterministic source of price vectors for the sampled conditions.
//
// The sample sequence is, in order:
//   1. explicit_prices (or the first components of explicit_pairs for GS);
//   2. every grid point of [-radius, radius]^n with spacing grid_step, when
//      n <= 4 and the grid has at most 100000 points;
//   3. `count` grid points drawn uniformly from the box.
// For the GS check each sampled p is paired with q >= p obtained by raising
// a random nonempty subset of coordinates by 1 to 4 grid steps.
struct PriceSampler {
  std::uint64_t seed = 0;
  Rational grid_step = Rational(1, 2);
  // Defaults to 2 * value range + 1.
  std::optional<Rational> radius;
  std::int64_t count = 1000;
  bool include_full_grid = true;
  std::vector<PriceVector> explicit_prices;
  std::vector<std::pair<PriceVector, PriceVector>> explicit_pairs;
  // Samples are checked in parallel; the lowest failing sample index wins.
  int threads = 1;
};

inline constexpr std::uint64_t kFullGridLimit = 100000;

std::vector<PriceVector> SamplePrices(const SetFunction& f,
                                      const PriceSampler& sampler);
std::vector<std::pair<PriceVector, PriceVector>> SamplePricePairs(
    const SetFunction& f, const PriceSampler& sampler);

// (GS) at sampled p <= q: every X in D(p) has some Y in D(q) containing
// {i in X | p_i = q_i}. Witness: prices p, q; set X.
Verdict CheckGsSampled(const SetFunction& f, const PriceSampler& sampler);

// (SI) at sampled p: every X in dom f \ D(p) is strictly improved by some Y
// with |X \ Y| <= 1 and |Y \ X| <= 1. Witness: price p; set X; lhs f[-p](X);
// rhs the best neighbour value.
Verdict CheckSiSampled(const SetFunction& f, const PriceSampler& sampler);

// (NC), or (NCsim) when `simultaneous`, at the single price p.
// Witness: price p; sets X, Y, I.
Verdict CheckNcAt(const SetFunction& f, const PriceVector& p,
                  bool simultaneous);

// CheckNcAt over the sampler's prices; the first failing sample is reported.
Verdict CheckNcSampled(const SetFunction& f, const PriceSampler& sampler,
                       bool simultaneous);

// (SNC) is the multiple exchange property verbatim.
Verdict CheckSnc(const SetFunction& f, const SweepOptions& options = {});

struct EquivalenceReport {
  Verdict single_exchange;    // exact
  Verdict multiple_exchange;  // exact, identical to SNC
  Verdict local;              // exact
  Verdict gs;                 // sampled
  Verdict si;                 // sampled
  Verdict nc;                 // sampled
  Verdict nc_simultaneous;    // sampled
};

// Runs all seven checks. Throws InvariantError if the exact verdicts
// disagree, or if a sampled check refutes while the exact checks pass.
EquivalenceReport MakeEquivalenceReport(const SetFunction& f,
                                        const PriceSampler& sampler,
                                        const SweepOptions& options = {});

}  // namespace mexc

#endif  // MEXC_ECON_H_
