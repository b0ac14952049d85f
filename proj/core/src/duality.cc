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

#include "mexc/duality.h"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "mexc/errors.h"
#include "scaled.h"

namespace mexc {
namespace {

using internal::AddExt;
using internal::IsNegInf;
using internal::kWideNegInf;
using internal::Wide;

// Integer tables of f1 and f2 in units of 1 / f.denominator().
struct ScaledSlice {
  int dimension = 0;
  std::vector<Wide> f1;
  std::vector<Wide> f2;
  Wide primal = kWideNegInf;
};

ScaledSlice ScaleSlice(const SetFunction& f, const SlicePair& slice) {
  ScaledSlice out;
  out.dimension = slice.dimension();
  const std::size_t size = slice.f1.size();
  out.f1.resize(size);
  out.f2.resize(size);
  const Subset common = slice.x & slice.y;
  const Subset x0 = slice.x & ~common;
  for (Subset local = 0; local < size; ++local) {
    const Subset j = slice.Expand(local);
    out.f1[local] = internal::ScaledValue(f, (x0 & ~slice.i) | common | j,
                                          f.denominator());
    out.f2[local] = internal::ScaledValue(
        f, slice.i | common | (slice.y0 & ~j), f.denominator());
    out.primal = std::max(out.primal, AddExt(out.f1[local], out.f2[local]));
  }
  return out;
}

// g1(q) + g2(-q) for an integer q in units of 1 / f.denominator().
class DualEvaluator {
 public:
  explicit DualEvaluator(const ScaledSlice& slice)
      : slice_(slice), q_sum_(slice.f1.size(), 0) {}

  Wide operator()(const std::vector<std::int64_t>& q) {
    for (Subset s = 1; s < q_sum_.size(); ++s) {
      q_sum_[s] = q_sum_[s & (s - 1)] + q[std::countr_zero(s)];
    }
    Wide g1 = kWideNegInf;
    Wide g2 = kWideNegInf;
    for (Subset s = 0; s < q_sum_.size(); ++s) {
      if (!IsNegInf(slice_.f1[s])) g1 = std::max(g1, slice_.f1[s] - q_sum_[s]);
      if (!IsNegInf(slice_.f2[s])) g2 = std::max(g2, slice_.f2[s] + q_sum_[s]);
    }
    ++visited_;
    const Wide value = AddExt(g1, g2);
    if (value < slice_.primal) {
      throw InvariantError("weak duality violated: dual value below primal");
    }
    return value;
  }

  std::int64_t visited() const { return visited_; }

 private:
  const ScaledSlice& slice_;
  std::vector<Wide> q_sum_;
  std::int64_t visited_ = 0;
};

PriceVector Unscale(const std::vector<std::int64_t>& q,
                    std::int64_t denominator) {
  std::vector<Rational> out;
  out.reserve(q.size());
  for (std::int64_t v : q) out.emplace_back(v, denominator);
  return PriceVector(std::move(out));
}

void FinishReport(DualityReport& report, Wide primal, Wide dual,
                  const std::vector<std::int64_t>& argmin,
                  std::int64_t denominator) {
  report.primal = internal::ToExtValue(primal, denominator);
  report.dual = internal::ToExtValue(dual, denominator);
  if (dual == primal) {
    report.gap = Rational(0);
    report.q_star = Unscale(argmin, denominator);
  } else if (!IsNegInf(primal)) {
    report.gap = Rational::FromWide(dual - primal, denominator);
  }
}

}  // namespace

Rational Conjugate(const SetFunction& f, const PriceVector& p) {
  internal::CheckLength(f, p);
  const std::int64_t denominator = internal::CommonDenominator(f, p);
  const std::vector<Wide> shifted = internal::ShiftedTable(f, p, denominator);
  Wide best = kWideNegInf;
  for (Subset s : f.domain()) best = std::max(best, shifted[s]);
  return Rational::FromWide(best, denominator);
}

Verdict CheckSubmodularPair(const SetFunction& f, const PriceVector& p,
                            const PriceVector& p2) {
  internal::CheckLength(f, p);
  internal::CheckLength(f, p2);
  const Rational lhs = Conjugate(f, p) + Conjugate(f, p2);
  const Rational rhs = Conjugate(f, Join(p, p2)) + Conjugate(f, Meet(p, p2));
  if (lhs >= rhs) return Verdict::Pass();
  Witness w;
  w.condition = "submodularity";
  w.prices = {{"p", p}, {"p2", p2}};
  w.lhs = lhs;
  w.rhs = rhs;
  return Verdict::Fail(std::move(w));
}

std::pair<ExtValue, ExtValue> SliceConjugates(const SlicePair& slice,
                                              const PriceVector& q) {
  if (q.size() != slice.dimension()) {
    throw InputError("q must have one entry per element of Y \\ X");
  }
  ExtValue g1 = ExtValue::NegInf();
  ExtValue g2 = ExtValue::NegInf();
  for (Subset local = 0; local < slice.f1.size(); ++local) {
    const Rational q_sum = q.Sum(local);
    g1 = Max(g1, slice.f1[local] - q_sum);
    g2 = Max(g2, slice.f2[local] - (-q_sum));
  }
  return {g1, g2};
}

ExtValue DualObjective(const SlicePair& slice, const PriceVector& q) {
  auto [g1, g2] = SliceConjugates(slice, q);
  return g1 + g2;
}

DualityReport FenchelGap(const SetFunction& f, Subset x, Subset y, Subset i,
                         const DualSearchOptions& options) {
  const SlicePair slice = Slice(f, x, y, i);
  const ScaledSlice scaled = ScaleSlice(f, slice);
  const std::int64_t denominator = f.denominator();
  const int d = scaled.dimension;

  std::int64_t radius;
  if (options.box_radius) {
    if (*options.box_radius < 0) throw InputError("box radius is negative");
    radius = (*options.box_radius * denominator).Floor();
  } else {
    std::int64_t top = f.scaled(f.domain().front());
    std::int64_t bottom = top;
    for (Subset s : f.domain()) {
      top = std::max(top, f.scaled(s));
      bottom = std::min(bottom, f.scaled(s));
    }
    const Wide range = Wide{top} - bottom;
    const Wide r = 2 * range + 1;
    if (r > std::numeric_limits<std::int64_t>::max() / 4) {
      throw OverflowError("default dual box radius out of range");
    }
    radius = static_cast<std::int64_t>(r);
  }

  DualityReport report;
  report.box_radius = Rational(radius, denominator);
  DualEvaluator dual(scaled);

  std::vector<std::int64_t> q(d, 0);
  Wide current = dual(q);

  // Descent over ±1 steps on coordinate subsets, staying inside the box.
  std::vector<std::int64_t> candidate(d);
  while (current > scaled.primal) {
    Wide best = current;
    std::vector<std::int64_t> best_q;
    for (int sign : {1, -1}) {
      for (Subset step = 1; step < (Subset{1} << d); ++step) {
        bool inside = true;
        for (int k = 0; k < d; ++k) {
          candidate[k] = q[k] + (Contains(step, k) ? sign : 0);
          if (candidate[k] > radius || candidate[k] < -radius) inside = false;
        }
        if (!inside) continue;
        const Wide value = dual(candidate);
        if (value < best) {
          best = value;
          best_q = candidate;
        }
      }
    }
    if (best_q.empty()) break;
    q = std::move(best_q);
    current = best;
  }

  if (current == scaled.primal) {
    report.visited = dual.visited();
    FinishReport(report, scaled.primal, current, q, denominator);
    return report;
  }

  // The descent stalled above the primal value: sweep the whole box.
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
  std::uint64_t points = 1;
  for (int k = 0; k < d; ++k) {
    if (points > options.max_box_points / side) {
      throw InputError(
          "dual search box (2R+1)^|Y\\X| exceeds " +
          std::to_string(options.max_box_points) +
          " points; choose a smaller box radius");
    }
    points *= side;
  }
  report.exhaustive = true;
  std::vector<std::int64_t> point(d, -radius);
  Wide best = current;
  std::vector<std::int64_t> argmin = q;
  for (std::uint64_t n = 0; n < points; ++n) {
    const Wide value = dual(point);
    if (value < best) {
      best = value;
      argmin = point;
    }
    for (int k = d - 1; k >= 0; --k) {
      if (++point[k] <= radius) break;
      point[k] = -radius;
    }
  }
  report.visited = dual.visited();
  FinishReport(report, scaled.primal, best, argmin, denominator);
  return report;
}

Rational BigMThreshold(const SetFunction& f, const PriceVector& q) {
  return 2 * f.ValueRange() + q.AbsSum() + 1;
}

BigMPair BigMVectors(const SetFunction& f, Subset x, Subset y, Subset i,
                     const PriceVector& q, std::optional<Rational> m_value) {
  const SlicePair slice = Slice(f, x, y, i);
  if (q.size() != slice.dimension()) {
    throw InputError("q must have one entry per element of Y \\ X");
  }
  const Rational threshold = BigMThreshold(f, q);
  const Rational m = m_value.value_or(threshold);
  if (m < threshold) {
    throw InputError("M = " + m.ToString() + " is below the threshold " +
                     threshold.ToString());
  }
  const auto [g1, g2] = SliceConjugates(slice, q);
  if (g1.is_neg_inf() || g2.is_neg_inf()) {
    throw PreconditionError(
        "a slice of f is -inf everywhere; the big-M reduction needs both "
        "slices to have a finite value");
  }

  const Subset common = x & y;
  const Subset x0 = x & ~common;
  std::vector<Rational> p1(f.n());
  std::vector<Rational> p2(f.n());
  for (int e = 0; e < f.n(); ++e) {
    if (Contains(slice.y0, e)) continue;
    if (Contains(x0 & ~i, e)) {
      p1[e] = -m;
      p2[e] = m;
    } else if (Contains(i, e)) {
      p1[e] = m;
      p2[e] = -m;
    } else if (Contains(common, e)) {
      p1[e] = -m;
      p2[e] = -m;
    } else {
      p1[e] = m;
      p2[e] = m;
    }
  }
  for (int k = 0; k < slice.dimension(); ++k) {
    p1[slice.y0_elements[k]] = q[k];
    p2[slice.y0_elements[k]] = q[k];
  }
  BigMPair pair{m, PriceVector(std::move(p1)), PriceVector(std::move(p2))};

  const Rational q_total = q.Sum(FullSet(q.size()));
  const int c = Cardinality(common);
  auto require = [](bool ok, const char* relation) {
    if (!ok) {
      throw InvariantError(std::string("big-M relation failed: ") + relation);
    }
  };
  require(g1.value() == Conjugate(f, pair.p1) -
                            m * (Cardinality(x0 & ~i) + c),
          "g1(q) = g(p1) - M(|X0 \\ I| + |C|)");
  require(g2.value() ==
              Conjugate(f, pair.p2) - m * (Cardinality(i) + c) + q_total,
          "g2(-q) = g(p2) - M(|I| + |C|) + q(Y0)");
  require(Conjugate(f, Join(pair.p1, pair.p2)) >=
              f.Eval(y).value() - q_total + m * c,
          "g(p1 v p2) >= f(Y) - q(Y0) + M|C|");
  require(Conjugate(f, Meet(pair.p1, pair.p2)) >=
              f.Eval(x).value() + m * Cardinality(x),
          "g(p1 ^ p2) >= f(X) + M|X|");
  return pair;
}

}  // namespace mexc
