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

#include "mexc/econ.h"

#include <algorithm>
#include <string>

#include "mexc/errors.h"
#include "mexc/generators.h"
#include "scaled.h"
#include "sweep.h"

namespace mexc {
namespace {

using internal::kWideNegInf;
using internal::Wide;

// f[-p] for every subset together with its maximum.
struct ShiftedValues {
  std::int64_t denominator;
  std::vector<Wide> values;
  Wide top;
};

ShiftedValues Shift(const SetFunction& f, const PriceVector& p) {
  internal::CheckLength(f, p);
  ShiftedValues out;
  out.denominator = internal::CommonDenominator(f, p);
  out.values = internal::ShiftedTable(f, p, out.denominator);
  out.top = kWideNegInf;
  for (Subset s : f.domain()) out.top = std::max(out.top, out.values[s]);
  return out;
}

SetFamily DemandFamily(const SetFunction& f, const ShiftedValues& shifted) {
  std::vector<Subset> members;
  for (Subset s : f.domain()) {
    if (shifted.values[s] == shifted.top) members.push_back(s);
  }
  return SetFamily(f.n(), members);
}

struct Grid {
  Rational step;
  std::int64_t half_width;  // coordinates are k * step, |k| <= half_width
};

Grid MakeGrid(const SetFunction& f, const PriceSampler& sampler) {
  if (sampler.grid_step <= 0) throw InputError("grid step must be positive");
  const Rational radius = sampler.radius.value_or(2 * f.ValueRange() + 1);
  if (radius < 0) throw InputError("sampler radius is negative");
  return Grid{sampler.grid_step, (radius / sampler.grid_step).Floor()};
}

PriceVector GridPoint(const Grid& grid, const std::vector<std::int64_t>& k) {
  std::vector<Rational> out;
  out.reserve(k.size());
  for (std::int64_t v : k) out.push_back(grid.step * v);
  return PriceVector(std::move(out));
}

// Full-grid points (when small enough) followed by `count` random points.
std::vector<PriceVector> GeneratedPrices(const SetFunction& f,
                                         const PriceSampler& sampler) {
  const Grid grid = MakeGrid(f, sampler);
  const int n = f.n();
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(grid.half_width) + 1;
  std::vector<PriceVector> out;

  if (sampler.include_full_grid && n <= 4) {
    std::uint64_t points = 1;
    for (int e = 0; e < n && points <= kFullGridLimit; ++e) points *= side;
    if (points <= kFullGridLimit) {
      std::vector<std::int64_t> k(n, -grid.half_width);
      for (std::uint64_t c = 0; c < points; ++c) {
        out.push_back(GridPoint(grid, k));
        for (int e = n - 1; e >= 0; --e) {
          if (++k[e] <= grid.half_width) break;
          k[e] = -grid.half_width;
        }
      }
    }
  }

  SplitMix64 rng(sampler.seed);
  std::vector<std::int64_t> k(n);
  for (std::int64_t c = 0; c < sampler.count; ++c) {
    for (int e = 0; e < n; ++e) {
      k[e] = rng.Between(-grid.half_width, grid.half_width);
    }
    out.push_back(GridPoint(grid, k));
  }
  return out;
}

void CheckSampleLength(const SetFunction& f, const PriceVector& p) {
  internal::CheckLength(f, p);
}

template <typename Sample, typename Probe>
Verdict RunSamples(const std::vector<Sample>& samples, int threads,
                   Probe&& probe) {
  auto w = internal::FirstFailure<Witness>(samples.size(), threads,
                                           [&](std::size_t k) {
                                             return probe(samples[k]);
                                           });
  const auto examined = static_cast<std::int64_t>(samples.size());
  if (w) return Verdict::Fail(std::move(*w), examined);
  return Verdict::Pass(examined);
}

}  // namespace

DemandSet Demand(const SetFunction& f, const PriceVector& p) {
  const ShiftedValues shifted = Shift(f, p);
  return DemandSet{p, DemandFamily(f, shifted),
                   Rational::FromWide(shifted.top, shifted.denominator)};
}

std::vector<PriceVector> SamplePrices(const SetFunction& f,
                                      const PriceSampler& sampler) {
  std::vector<PriceVector> out;
  for (const PriceVector& p : sampler.explicit_prices) {
    CheckSampleLength(f, p);
    out.push_back(p);
  }
  std::vector<PriceVector> generated = GeneratedPrices(f, sampler);
  out.insert(out.end(), std::make_move_iterator(generated.begin()),
             std::make_move_iterator(generated.end()));
  return out;
}

std::vector<std::pair<PriceVector, PriceVector>> SamplePricePairs(
    const SetFunction& f, const PriceSampler& sampler) {
  std::vector<std::pair<PriceVector, PriceVector>> out;
  for (const auto& [p, q] : sampler.explicit_pairs) {
    CheckSampleLength(f, p);
    CheckSampleLength(f, q);
    for (int e = 0; e < p.size(); ++e) {
      if (q[e] < p[e]) throw InputError("GS price pair must satisfy p <= q");
    }
    out.emplace_back(p, q);
  }
  const Rational step = MakeGrid(f, sampler).step;
  SplitMix64 rng(sampler.seed ^ 0x9e3779b97f4a7c15ULL);
  for (const PriceVector& p : SamplePrices(f, sampler)) {
    std::vector<Rational> q(p.entries().begin(), p.entries().end());
    bool raised = false;
    for (int e = 0; e < f.n(); ++e) {
      if (rng.Below(2) == 1) {
        q[e] += step * rng.Between(1, 4);
        raised = true;
      }
    }
    if (!raised) {
      q[rng.Below(f.n())] += step * rng.Between(1, 4);
    }
    out.emplace_back(p, PriceVector(std::move(q)));
  }
  return out;
}

Verdict CheckGsSampled(const SetFunction& f, const PriceSampler& sampler) {
  const auto pairs = SamplePricePairs(f, sampler);
  return RunSamples(pairs, sampler.threads,
                    [&](const std::pair<PriceVector, PriceVector>& pq)
                        -> std::optional<Witness> {
    const auto& [p, q] = pq;
    Subset unchanged = 0;
    for (int e = 0; e < f.n(); ++e) {
      if (p[e] == q[e]) unchanged |= Bit(e);
    }
    const SetFamily demand_p = DemandFamily(f, Shift(f, p));
    const SetFamily demand_q = DemandFamily(f, Shift(f, q));
    for (Subset x : demand_p.members()) {
      const Subset keep = x & unchanged;
      const auto members = demand_q.members();
      const bool ok = std::any_of(members.begin(), members.end(),
                                  [&](Subset y) { return IsSubsetOf(keep, y); });
      if (!ok) {
        Witness w;
        w.condition = "gs";
        w.prices = {{"p", p}, {"q", q}};
        w.sets = {{"X", x}};
        return w;
      }
    }
    return std::nullopt;
  });
}

Verdict CheckSiSampled(const SetFunction& f, const PriceSampler& sampler) {
  const auto prices = SamplePrices(f, sampler);
  const Subset ground = f.ground_set();
  return RunSamples(prices, sampler.threads,
                    [&](const PriceVector& p) -> std::optional<Witness> {
    const ShiftedValues shifted = Shift(f, p);
    const auto& v = shifted.values;
    for (Subset x : f.domain()) {
      if (v[x] == shifted.top) continue;
      Wide best = kWideNegInf;
      ForEachElement(ground & ~x, [&](int b) { best = std::max(best, v[x | Bit(b)]); });
      ForEachElement(x, [&](int a) {
        const Subset dropped = x & ~Bit(a);
        best = std::max(best, v[dropped]);
        ForEachElement(ground & ~x,
                       [&](int b) { best = std::max(best, v[dropped | Bit(b)]); });
      });
      if (best <= v[x]) {
        Witness w;
        w.condition = "si";
        w.prices = {{"p", p}};
        w.sets = {{"X", x}};
        w.lhs = internal::ToExtValue(v[x], shifted.denominator);
        w.rhs = internal::ToExtValue(best, shifted.denominator);
        return w;
      }
    }
    return std::nullopt;
  });
}

Verdict CheckNcAt(const SetFunction& f, const PriceVector& p,
                  bool simultaneous) {
  const SetFamily demand = DemandFamily(f, Shift(f, p));
  for (Subset x : demand.members()) {
    for (Subset y : demand.members()) {
      const Subset diff = x & ~y;
      if (diff == 0) continue;
      std::optional<Witness> failure;
      ForEachSubsetOf(diff, [&](Subset i) {
        const Subset x_rest = x & ~i;
        const bool found = !ForEachSubsetOf(y & ~x, [&](Subset j) {
          const bool ok = demand.Contains(x_rest | j) &&
                          (!simultaneous || demand.Contains((y & ~j) | i));
          return !ok;
        });
        if (found) return true;
        Witness w;
        w.condition = simultaneous ? "ncsim" : "nc";
        w.prices = {{"p", p}};
        w.sets = {{"X", x}, {"Y", y}, {"I", i}};
        failure = std::move(w);
        return false;
      });
      if (failure) return Verdict::Fail(std::move(*failure), 1);
    }
  }
  return Verdict::Pass(1);
}

Verdict CheckNcSampled(const SetFunction& f, const PriceSampler& sampler,
                       bool simultaneous) {
  const auto prices = SamplePrices(f, sampler);
  return RunSamples(prices, sampler.threads,
                    [&](const PriceVector& p) -> std::optional<Witness> {
    Verdict v = CheckNcAt(f, p, simultaneous);
    return v.passed() ? std::nullopt : std::move(v.witness);
  });
}

Verdict CheckSnc(const SetFunction& f, const SweepOptions& options) {
  return CheckMultipleExchange(f, options);
}

EquivalenceReport MakeEquivalenceReport(const SetFunction& f,
                                        const PriceSampler& sampler,
                                        const SweepOptions& options) {
  EquivalenceReport report{
      CheckSingleExchange(f, options),
      CheckSnc(f, options),
      CheckLocal(f, options),
      CheckGsSampled(f, sampler),
      CheckSiSampled(f, sampler),
      CheckNcSampled(f, sampler, /*simultaneous=*/false),
      CheckNcSampled(f, sampler, /*simultaneous=*/true),
  };
  const bool exact = report.single_exchange.passed();
  if (report.multiple_exchange.passed() != exact ||
      report.local.passed() != exact) {
    throw InvariantError(
        "exact exchange verdicts disagree (single, multiple, local)");
  }
  if (exact && !(report.gs.passed() && report.si.passed() &&
                 report.nc.passed() && report.nc_simultaneous.passed())) {
    throw InvariantError(
        "a sampled condition was refuted although the exchange property "
        "holds");
  }
  return report;
}

}  // namespace mexc
