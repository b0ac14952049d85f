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

#include "mexc/exchange.h"

#include <algorithm>

#include "mexc/errors.h"
#include "scaled.h"
#include "sweep.h"

namespace mexc {
namespace {

using internal::AddExt;
using internal::FirstFailure;
using internal::IsNegInf;
using internal::kWideNegInf;
using internal::Wide;

Wide Value(const SetFunction& f, Subset s) {
  return f.InDomain(s) ? Wide{f.scaled(s)} : kWideNegInf;
}

ExtValue Unscale(const SetFunction& f, Wide v) {
  return internal::ToExtValue(v, f.denominator());
}

// Orders candidate exchange sets by cardinality, then by bitset.
bool SmallerExchangeSet(Subset a, Subset b) {
  int ca = Cardinality(a);
  int cb = Cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

// max over J ⊆ Y \ X of f((X \ I) ∪ J) + f((Y \ J) ∪ I), returning early
// once the running maximum reaches `enough`.
Wide BestMultipleRhs(const SetFunction& f, Subset x, Subset y, Subset i,
                     Wide enough) {
  const Subset x_rest = x & ~i;
  const Subset y0 = y & ~x;
  Wide best = kWideNegInf;
  ForEachSubsetOf(y0, [&](Subset j) {
    best = std::max(best, AddExt(Value(f, x_rest | j), Value(f, (y & ~j) | i)));
    return best < enough;
  });
  return best;
}

// Best right-hand side of the single exchange inequality at (X, Y, i). The
// X-i / Y+i option is included iff `allow_drop`.
Wide BestSingleRhs(const SetFunction& f, Subset x, Subset y, int i,
                   bool allow_drop, Wide enough) {
  const Subset xi = x & ~Bit(i);
  const Subset yi = y | Bit(i);
  Wide best = allow_drop ? AddExt(Value(f, xi), Value(f, yi)) : kWideNegInf;
  Subset candidates = y & ~x;
  while (candidates != 0 && best < enough) {
    int j = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = std::max(best,
                    AddExt(Value(f, xi | Bit(j)), Value(f, yi & ~Bit(j))));
  }
  return best;
}

Verdict SingleExchangeSweep(const SetFunction& f, bool allow_drop,
                            const char* condition,
                            const SweepOptions& options) {
  const auto dom = f.domain();
  auto probe = [&](std::size_t xi) -> std::optional<Witness> {
    const Subset x = dom[xi];
    for (Subset y : dom) {
      Subset diff = x & ~y;
      if (diff == 0) continue;
      const Wide lhs = Wide{f.scaled(x)} + f.scaled(y);
      while (diff != 0) {
        int i = std::countr_zero(diff);
        diff &= diff - 1;
        Wide rhs = BestSingleRhs(f, x, y, i, allow_drop, lhs);
        if (rhs < lhs) {
          Witness w;
          w.condition = condition;
          w.sets = {{"X", x}, {"Y", y}};
          w.elements = {{"i", i}};
          w.lhs = Unscale(f, lhs);
          w.rhs = Unscale(f, rhs);
          return w;
        }
      }
    }
    return std::nullopt;
  };
  if (auto w = FirstFailure<Witness>(dom.size(), options.threads, probe)) {
    return Verdict::Fail(std::move(*w));
  }
  return Verdict::Pass();
}

void CheckExchangeArguments(int n, Subset x, Subset y, Subset i) {
  CheckSubset(x, n, "X");
  CheckSubset(y, n, "Y");
  CheckSubset(i, n, "I");
  if (!IsSubsetOf(i, x & ~y)) {
    throw PreconditionError("I must be a subset of X \\ Y");
  }
}

void CheckExchangePreconditions(const SetFunction& f, Subset x, Subset y,
                                Subset i) {
  CheckExchangeArguments(f.n(), x, y, i);
  if (!f.InDomain(x) || !f.InDomain(y)) {
    throw PreconditionError("X and Y must belong to dom f");
  }
}

Witness LocalWitness(const SetFunction& f, const char* condition, Subset x,
                     std::initializer_list<std::pair<const char*, int>> elems,
                     Wide lhs, Wide rhs) {
  Witness w;
  w.condition = condition;
  w.sets = {{"X", x}};
  for (const auto& [name, e] : elems) w.elements.emplace_back(name, e);
  w.lhs = Unscale(f, lhs);
  w.rhs = Unscale(f, rhs);
  return w;
}

// Smallest J ⊆ Y \ X (cardinality, then bitset) accepted by `ok`.
template <typename Accept>
std::optional<Subset> SmallestExchangeSet(Subset x, Subset y, Accept&& ok) {
  std::optional<Subset> best;
  ForEachSubsetOf(y & ~x, [&](Subset j) {
    if ((!best || SmallerExchangeSet(j, *best)) && ok(j)) best = j;
    return true;
  });
  return best;
}

}  // namespace

Verdict CheckSingleExchange(const SetFunction& f,
                            const SweepOptions& options) {
  return SingleExchangeSweep(f, /*allow_drop=*/true, "mnat-exc", options);
}

std::optional<ExchangeCertificate> FindExchangeSet(const SetFunction& f,
                                                   Subset x, Subset y,
                                                   Subset i) {
  CheckExchangePreconditions(f, x, y, i);
  const Wide lhs = Wide{f.scaled(x)} + f.scaled(y);
  const Subset x_rest = x & ~i;
  auto rhs_of = [&](Subset j) {
    return AddExt(Value(f, x_rest | j), Value(f, (y & ~j) | i));
  };
  std::optional<Subset> j = SmallestExchangeSet(
      x, y, [&](Subset candidate) { return rhs_of(candidate) >= lhs; });
  if (!j) return std::nullopt;
  return ExchangeCertificate{*j, Unscale(f, lhs), Unscale(f, rhs_of(*j))};
}

ExtValue BestExchangeValue(const SetFunction& f, Subset x, Subset y,
                           Subset i) {
  CheckExchangePreconditions(f, x, y, i);
  return Unscale(f, BestMultipleRhs(f, x, y, i, -kWideNegInf));
}

Verdict CheckMultipleExchange(const SetFunction& f,
                              const SweepOptions& options) {
  const auto dom = f.domain();
  auto probe = [&](std::size_t xi) -> std::optional<Witness> {
    const Subset x = dom[xi];
    for (Subset y : dom) {
      const Subset diff = x & ~y;
      if (diff == 0) continue;
      const Wide lhs = Wide{f.scaled(x)} + f.scaled(y);
      std::optional<Witness> failure;
      ForEachSubsetOf(diff, [&](Subset i) {
        if (i == 0) return true;
        Wide rhs = BestMultipleRhs(f, x, y, i, lhs);
        if (rhs >= lhs) return true;
        Witness w;
        w.condition = "mnat-exc-m";
        w.sets = {{"X", x}, {"Y", y}, {"I", i}};
        w.lhs = Unscale(f, lhs);
        w.rhs = Unscale(f, rhs);
        failure = std::move(w);
        return false;
      });
      if (failure) return failure;
    }
    return std::nullopt;
  };
  if (auto w = FirstFailure<Witness>(dom.size(), options.threads, probe)) {
    return Verdict::Fail(std::move(*w));
  }
  return Verdict::Pass();
}

Verdict CheckValuatedMatroid(const SetFunction& f,
                             const SweepOptions& options) {
  const auto dom = f.domain();
  const Subset first = dom.front();
  for (Subset y : dom) {
    if (Cardinality(y) != Cardinality(first)) {
      Witness w;
      w.condition = "equicardinality";
      w.sets = {{"X", first}, {"Y", y}};
      return Verdict::Fail(std::move(w));
    }
  }
  return SingleExchangeSweep(f, /*allow_drop=*/false, "valuated-matroid",
                             options);
}

Verdict CheckLocal(const SetFunction& f, const SweepOptions& options) {
  Verdict domain =
      CheckFamily(EffectiveDomain(f), FamilyAxiom::kExchange, options);
  if (!domain.passed()) {
    domain.witness->condition = "local(domain)";
    return domain;
  }

  const std::size_t count = f.table_size();
  const Subset ground = f.ground_set();

  auto family1 = [&](std::size_t index) -> std::optional<Witness> {
    const Subset x = static_cast<Subset>(index);
    const Wide fx = Value(f, x);
    if (IsNegInf(fx)) return std::nullopt;
    const Subset free = ground & ~x;
    for (int i = 0; i < f.n(); ++i) {
      if (!Contains(free, i)) continue;
      for (int j = i + 1; j < f.n(); ++j) {
        if (!Contains(free, j)) continue;
        Wide lhs = AddExt(Value(f, x | Bit(i) | Bit(j)), fx);
        if (IsNegInf(lhs)) continue;
        Wide rhs = AddExt(Value(f, x | Bit(i)), Value(f, x | Bit(j)));
        if (rhs < lhs) {
          return LocalWitness(f, "local(i)", x, {{"i", i}, {"j", j}}, lhs, rhs);
        }
      }
    }
    return std::nullopt;
  };

  auto family2 = [&](std::size_t index) -> std::optional<Witness> {
    const Subset x = static_cast<Subset>(index);
    const Subset free = ground & ~x;
    for (int i = 0; i < f.n(); ++i) {
      if (!Contains(free, i)) continue;
      for (int j = i + 1; j < f.n(); ++j) {
        if (!Contains(free, j)) continue;
        const Wide fij = Value(f, x | Bit(i) | Bit(j));
        if (IsNegInf(fij)) continue;
        for (int k = 0; k < f.n(); ++k) {
          if (!Contains(free, k) || k == i || k == j) continue;
          Wide lhs = AddExt(fij, Value(f, x | Bit(k)));
          if (IsNegInf(lhs)) continue;
          Wide rhs = std::max(
              AddExt(Value(f, x | Bit(i) | Bit(k)), Value(f, x | Bit(j))),
              AddExt(Value(f, x | Bit(j) | Bit(k)), Value(f, x | Bit(i))));
          if (rhs < lhs) {
            return LocalWitness(f, "local(ii)", x,
                                {{"i", i}, {"j", j}, {"k", k}}, lhs, rhs);
          }
        }
      }
    }
    return std::nullopt;
  };

  // Pairings {i,j} | {k,l} are unordered, so i is the smallest of the four.
  auto family3 = [&](std::size_t index) -> std::optional<Witness> {
    const Subset x = static_cast<Subset>(index);
    const Subset free = ground & ~x;
    for (int i = 0; i < f.n(); ++i) {
      if (!Contains(free, i)) continue;
      for (int j = i + 1; j < f.n(); ++j) {
        if (!Contains(free, j)) continue;
        const Wide fij = Value(f, x | Bit(i) | Bit(j));
        if (IsNegInf(fij)) continue;
        for (int k = i + 1; k < f.n(); ++k) {
          if (!Contains(free, k) || k == j) continue;
          for (int l = k + 1; l < f.n(); ++l) {
            if (!Contains(free, l) || l == j) continue;
            Wide lhs = AddExt(fij, Value(f, x | Bit(k) | Bit(l)));
            if (IsNegInf(lhs)) continue;
            Wide rhs = std::max(AddExt(Value(f, x | Bit(i) | Bit(k)),
                                       Value(f, x | Bit(j) | Bit(l))),
                                AddExt(Value(f, x | Bit(j) | Bit(k)),
                                       Value(f, x | Bit(i) | Bit(l))));
            if (rhs < lhs) {
              return LocalWitness(f, "local(iii)", x,
                                  {{"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                  lhs, rhs);
            }
          }
        }
      }
    }
    return std::nullopt;
  };

  if (auto w = FirstFailure<Witness>(count, options.threads, family1)) {
    return Verdict::Fail(std::move(*w));
  }
  if (auto w = FirstFailure<Witness>(count, options.threads, family2)) {
    return Verdict::Fail(std::move(*w));
  }
  if (auto w = FirstFailure<Witness>(count, options.threads, family3)) {
    return Verdict::Fail(std::move(*w));
  }
  return Verdict::Pass();
}

std::optional<Subset> MaximizerExchange(const SetFunction& f, Subset x,
                                        Subset y, Subset i) {
  CheckExchangeArguments(f.n(), x, y, i);
  std::int64_t top = SetFunction::kNegInfScaled;
  for (Subset s : f.domain()) top = std::max(top, f.scaled(s));
  auto maximizer = [&](Subset s) {
    return f.InDomain(s) && f.scaled(s) == top;
  };
  if (!maximizer(x) || !maximizer(y)) {
    throw PreconditionError("X and Y must be maximizers of f");
  }
  const Subset x_rest = x & ~i;
  return SmallestExchangeSet(x, y, [&](Subset j) {
    return maximizer(x_rest | j) && maximizer((y & ~j) | i);
  });
}

std::string_view AxiomName(FamilyAxiom axiom) {
  switch (axiom) {
    case FamilyAxiom::kExchange:
      return "bnat-exc";
    case FamilyAxiom::kMultipleExchange:
      return "bnat-exc-m";
    case FamilyAxiom::kPlusMinus:
      return "bnat-exc-pm";
  }
  return "";
}

Verdict CheckFamily(const SetFamily& family, FamilyAxiom axiom,
                    const SweepOptions& options) {
  if (family.empty()) throw InputError("set family is empty");
  const auto members = family.members();
  auto in = [&](Subset s) { return family.Contains(s); };

  auto make_witness = [&](std::string condition, Subset x, Subset y) {
    Witness w;
    w.condition = std::move(condition);
    w.sets = {{"X", x}, {"Y", y}};
    return w;
  };

  auto probe = [&](std::size_t xi) -> std::optional<Witness> {
    const Subset x = members[xi];
    for (Subset y : members) {
      const Subset diff = x & ~y;
      if (diff == 0) continue;
      const Subset y0 = y & ~x;
      if (axiom == FamilyAxiom::kMultipleExchange) {
        std::optional<Witness> failure;
        ForEachSubsetOf(diff, [&](Subset i) {
          const Subset x_rest = x & ~i;
          bool found = !ForEachSubsetOf(y0, [&](Subset j) {
            return !(in(x_rest | j) && in((y & ~j) | i));
          });
          if (found) return true;
          failure = make_witness("bnat-exc-m", x, y);
          failure->sets.emplace_back("I", i);
          return false;
        });
        if (failure) return failure;
        continue;
      }
      Subset remaining = diff;
      while (remaining != 0) {
        const int i = std::countr_zero(remaining);
        remaining &= remaining - 1;
        const Subset xi = x & ~Bit(i);
        const Subset yi = y | Bit(i);
        bool ok_a = in(xi);
        bool ok_b = in(yi);
        bool ok_pair = ok_a && ok_b;
        ForEachElement(y0, [&](int j) {
          const bool a = in(xi | Bit(j));
          const bool b = in(yi & ~Bit(j));
          ok_a = ok_a || a;
          ok_b = ok_b || b;
          ok_pair = ok_pair || (a && b);
        });
        std::optional<Witness> failure;
        if (axiom == FamilyAxiom::kExchange && !ok_pair) {
          failure = make_witness("bnat-exc", x, y);
        } else if (axiom == FamilyAxiom::kPlusMinus && !(ok_a && ok_b)) {
          failure = make_witness(ok_a ? "bnat-exc-pm(b)" : "bnat-exc-pm(a)",
                                 x, y);
        }
        if (failure) {
          failure->elements = {{"i", i}};
          return failure;
        }
      }
    }
    return std::nullopt;
  };
  if (auto w = FirstFailure<Witness>(members.size(), options.threads, probe)) {
    return Verdict::Fail(std::move(*w));
  }
  return Verdict::Pass();
}

std::optional<Subset> FindBaseExchange(const SetFamily& family, Subset x,
                                       Subset y, Subset i) {
  CheckExchangeArguments(family.n(), x, y, i);
  if (!family.Contains(x) || !family.Contains(y)) {
    throw PreconditionError("X and Y must be members of the family");
  }
  const Subset x_rest = x & ~i;
  return SmallestExchangeSet(x, y, [&](Subset j) {
    return family.Contains(x_rest | j) && family.Contains((y & ~j) | i);
  });
}

}  // namespace mexc
