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

#include "mexc/generators.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "mexc/errors.h"
#include "mexc/exchange.h"

namespace mexc {
namespace {

// Checkers are run on generated instances up to this ground-set size.
constexpr int kValidationLimit = 12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void Validate(const UniformMatroid& m) {
  if (m.n < 1 || m.n > kMaxGroundSetSize || m.k < 0 || m.k > m.n) {
    throw InputError("uniform matroid needs 0 <= k <= n and 1 <= n <= 20");
  }
}

void Validate(const GraphicMatroid& m) {
  if (m.vertices < 1 || m.vertices > 5) {
    throw InputError("graphic matroids are limited to 1..5 vertices");
  }
  if (m.edges.empty() || m.edges.size() > 10) {
    throw InputError("graphic matroids are limited to 1..10 edges");
  }
  for (const auto& [a, b] : m.edges) {
    if (a < 1 || a > m.vertices || b < 1 || b > m.vertices) {
      throw InputError("edge endpoint outside 1.." +
                       std::to_string(m.vertices));
    }
  }
}

void Validate(const PartitionMatroid& m) {
  if (m.blocks.size() != m.capacities.size()) {
    throw InputError("partition matroid needs one capacity per block");
  }
  int n = 0;
  for (const auto& block : m.blocks) n += static_cast<int>(block.size());
  if (n < 1 || n > kMaxGroundSetSize) {
    throw InputError("partition matroid ground set must have 1..20 elements");
  }
  std::vector<bool> seen(n, false);
  for (const auto& block : m.blocks) {
    for (int e : block) {
      if (e < 1 || e > n || seen[e - 1]) {
        throw InputError("blocks must partition 1.." + std::to_string(n));
      }
      seen[e - 1] = true;
    }
  }
  for (int c : m.capacities) {
    if (c < 0) throw InputError("partition capacities must be nonnegative");
  }
}

void Validate(const FreeMatroid& m) {
  if (m.n < 1 || m.n > kMaxGroundSetSize) {
    throw InputError("free matroid needs 1 <= n <= 20");
  }
}

int RankOf(const UniformMatroid& m, Subset s) {
  return std::min(Cardinality(s), m.k);
}

int RankOf(const GraphicMatroid& m, Subset s) {
  UnionFind components(m.vertices);
  int rank = 0;
  ForEachElement(s, [&](int e) {
    if (components.Unite(m.edges[e].first - 1, m.edges[e].second - 1)) ++rank;
  });
  return rank;
}

int RankOf(const PartitionMatroid& m, Subset s) {
  int rank = 0;
  for (std::size_t b = 0; b < m.blocks.size(); ++b) {
    int hits = 0;
    for (int e : m.blocks[b]) hits += Contains(s, e - 1) ? 1 : 0;
    rank += std::min(hits, m.capacities[b]);
  }
  return rank;
}

int RankOf(const FreeMatroid&, Subset s) { return Cardinality(s); }

void RequireWeights(const MatroidSpec& spec, int n) {
  if (spec.weights && spec.weights->size() != n) {
    throw InputError("weight vector has " +
                     std::to_string(spec.weights->size()) +
                     " entries, expected " + std::to_string(n));
  }
}

void SelfCheck(const Verdict& verdict, const char* what) {
  if (!verdict.passed()) {
    throw InvariantError(std::string(what) + " failed validation: " +
                         FormatWitness(*verdict.witness));
  }
}

}  // namespace

int GroundSetSize(const MatroidSpec& spec) {
  return std::visit(
      Overloaded{
          [](const UniformMatroid& m) { Validate(m); return m.n; },
          [](const GraphicMatroid& m) {
            Validate(m);
            return static_cast<int>(m.edges.size());
          },
          [](const PartitionMatroid& m) {
            Validate(m);
            int n = 0;
            for (const auto& block : m.blocks) n += static_cast<int>(block.size());
            return n;
          },
          [](const FreeMatroid& m) { Validate(m); return m.n; },
      },
      spec.kind);
}

int MatroidRank(const MatroidSpec& spec, Subset s) {
  CheckSubset(s, GroundSetSize(spec), "subset");
  return std::visit([s](const auto& m) { return RankOf(m, s); }, spec.kind);
}

std::vector<Subset> MatroidBases(const MatroidSpec& spec) {
  const int n = GroundSetSize(spec);
  const Subset ground = FullSet(n);
  const int rank = MatroidRank(spec, ground);
  std::vector<Subset> bases;
  for (Subset s = 0; s <= ground; ++s) {
    if (Cardinality(s) == rank &&
        std::visit([s](const auto& m) { return RankOf(m, s); }, spec.kind) ==
            rank) {
      bases.push_back(s);
    }
    if (s == ground) break;
  }
  return bases;
}

GraphicMatroid CompleteGraph(int vertices) {
  GraphicMatroid g{vertices, {}};
  for (int a = 1; a <= vertices; ++a) {
    for (int b = a + 1; b <= vertices; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

SetFunction GenWeightedMatroid(const MatroidSpec& spec) {
  const int n = GroundSetSize(spec);
  if (!spec.weights) throw InputError("weighted matroid needs weights");
  RequireWeights(spec, n);
  std::vector<ExtValue> table(std::size_t{1} << n);
  for (Subset b : MatroidBases(spec)) table[b] = spec.weights->Sum(b);
  SetFunction f(n, table);
  if (n <= kValidationLimit) {
    SelfCheck(CheckValuatedMatroid(f), "weighted matroid");
  }
  return f;
}

SetFunction GenRankValuation(const MatroidSpec& spec) {
  const int n = GroundSetSize(spec);
  std::vector<ExtValue> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) {
    table[s] = std::visit([s](const auto& m) { return RankOf(m, s); },
                          spec.kind);
  }
  SetFunction f(n, table);
  if (n <= kValidationLimit) SelfCheck(CheckSingleExchange(f), "rank function");
  return f;
}

SetFunction GenModularPlusConcave(const PriceVector& w,
                                  std::span<const Rational> g) {
  const int n = w.size();
  if (static_cast<int>(g.size()) != n + 1) {
    throw InputError("concave sequence must have n + 1 entries");
  }
  for (int k = 1; k < n; ++k) {
    if (g[k + 1] - g[k] > g[k] - g[k - 1]) {
      throw InputError("sequence is not concave at position " +
                       std::to_string(k));
    }
  }
  std::vector<ExtValue> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) {
    table[s] = w.Sum(s) + g[Cardinality(s)];
  }
  SetFunction f(n, table);
  if (n <= kValidationLimit) {
    SelfCheck(CheckSingleExchange(f), "modular plus concave function");
  }
  return f;
}

SetFunction Mutate(const SetFunction& f, std::uint64_t seed,
                   const Rational& magnitude) {
  SplitMix64 rng(seed);
  std::vector<ExtValue> table = f.Table();
  const Subset target = f.domain()[rng.Below(f.domain().size())];
  const Rational delta = rng.Below(2) == 0 ? magnitude : -magnitude;
  table[target] = table[target].value() + delta;
  return SetFunction(f.n(), table);
}

FunctionEnumerator::FunctionEnumerator(EnumerationSpec spec)
    : spec_(std::move(spec)) {
  if (spec_.n < 1 || spec_.n > 3) {
    throw InputError("exhaustive enumeration supports n in 1..3");
  }
  if (spec_.alphabet.empty()) throw InputError("alphabet is empty");
  bool any_finite = false;
  bool has_neg_inf = false;
  for (std::size_t a = 0; a < spec_.alphabet.size(); ++a) {
    any_finite = any_finite || spec_.alphabet[a].is_finite();
    has_neg_inf = has_neg_inf || spec_.alphabet[a].is_neg_inf();
    for (std::size_t b = 0; b < a; ++b) {
      if (spec_.alphabet[a] == spec_.alphabet[b]) {
        throw InputError("alphabet contains a repeated value");
      }
    }
  }
  if (!any_finite) throw InputError("alphabet needs a finite value");
  const std::size_t positions = std::size_t{1} << spec_.n;
  __int128 total = 1;
  for (std::size_t p = 0; p < positions; ++p) {
    total *= spec_.alphabet.size();
    if (total > static_cast<__int128>(kMaxEnumeration) + 1) {
      throw InputError("enumeration universe exceeds 10^7 functions");
    }
  }
  if (has_neg_inf) --total;
  if (total > static_cast<__int128>(kMaxEnumeration)) {
    throw InputError("enumeration universe exceeds 10^7 functions");
  }
  count_ = static_cast<std::uint64_t>(total);
  digits_.assign(positions, 0);
}

std::optional<SetFunction> FunctionEnumerator::Next() {
  while (!done_) {
    std::vector<ExtValue> table(digits_.size());
    bool any_finite = false;
    for (std::size_t s = 0; s < digits_.size(); ++s) {
      table[s] = spec_.alphabet[digits_[s]];
      any_finite = any_finite || table[s].is_finite();
    }
    // Advance the odometer; position 0 is the most significant digit.
    done_ = true;
    for (std::size_t p = digits_.size(); p-- > 0;) {
      if (++digits_[p] < spec_.alphabet.size()) {
        done_ = false;
        break;
      }
      digits_[p] = 0;
    }
    if (any_finite) return SetFunction(spec_.n, table);
  }
  return std::nullopt;
}

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty random range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t SplitMix64::Between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

SetFunction RandomMNaturalConcave(std::uint64_t seed, int n) {
  SplitMix64 rng(seed);
  std::vector<Rational> w(n);
  for (Rational& v : w) v = rng.Between(-3, 3);
  const PriceVector weights(w);

  switch (rng.Below(4)) {
    case 0: {
      // Modular plus a concave function of the cardinality.
      std::vector<Rational> g(n + 1);
      std::int64_t step = rng.Between(0, 4);
      for (int k = 1; k <= n; ++k) {
        g[k] = g[k - 1] + step;
        step -= rng.Between(0, 2);
      }
      return GenModularPlusConcave(weights, g);
    }
    case 1: {
      const int k = static_cast<int>(rng.Between(0, n));
      return GenWeightedMatroid({UniformMatroid{k, n}, weights});
    }
    case 2: {
      // Rank of a random partition matroid plus a modular term.
      PartitionMatroid m;
      for (int e = 1; e <= n; ++e) {
        const std::size_t b = rng.Below(m.blocks.size() + 1);
        if (b == m.blocks.size()) m.blocks.emplace_back();
        m.blocks[b].push_back(e);
      }
      for (const auto& block : m.blocks) {
        m.capacities.push_back(
            static_cast<int>(rng.Between(0, static_cast<int>(block.size()))));
      }
      const SetFunction rank = GenRankValuation({m, std::nullopt});
      std::vector<ExtValue> table = rank.Table();
      for (Subset s = 0; s < table.size(); ++s) {
        table[s] = table[s] + ExtValue(weights.Sum(s));
      }
      SetFunction f(n, table);
      if (n <= kValidationLimit) SelfCheck(CheckSingleExchange(f), "rank plus modular");
      return f;
    }
    default: {
      // Linear weights on the independent sets of a uniform matroid.
      const int k = static_cast<int>(rng.Between(0, n));
      std::vector<ExtValue> table(std::size_t{1} << n);
      for (Subset s = 0; s < table.size(); ++s) {
        if (Cardinality(s) <= k) table[s] = weights.Sum(s);
      }
      SetFunction f(n, table);
      if (n <= kValidationLimit) {
        SelfCheck(CheckSingleExchange(f), "weighted independent sets");
      }
      return f;
    }
  }
}

}  // namespace mexc
