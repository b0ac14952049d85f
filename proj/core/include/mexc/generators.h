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

#ifndef MEXC_GENERATORS_H_
#define MEXC_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mexc/ext_value.h"
#include "mexc/rational.h"
#include "mexc/set_function.h"

namespace mexc {

struct UniformMatroid {
  int k;
  int n;
};

// Edges between 1-based vertices; element e is the e-th edge.
struct GraphicMatroid {
  int vertices;
  std::vector<std::pair<int, int>> edges;
};

// Blocks hold 1-based elements and together partition {1..n}.
struct PartitionMatroid {
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
};

struct FreeMatroid {
  int n;
};

struct MatroidSpec {
  std::variant<UniformMatroid, GraphicMatroid, PartitionMatroid, FreeMatroid>
      kind;
  std::optional<PriceVector> weights;
};

// Throws InputError for invalid parameters (k > n, more than 5 vertices or
// 10 edges, blocks not partitioning the ground set, ...).
int GroundSetSize(const MatroidSpec& spec);
int MatroidRank(const MatroidSpec& spec, Subset s);
// Bases in increasing bitset order.
std::vector<Subset> MatroidBases(const MatroidSpec& spec);

// K4 as a graphic matroid: 4 vertices, 6 edges in order
// 12, 13, 14, 23, 24, 34.
GraphicMatroid CompleteGraph(int vertices);

// Generated instances are validated by the exchange checkers when n <= 12;
// a failure there throws InvariantError.

// f(B) = w(B) on bases, -inf elsewhere. Requires weights.
SetFunction GenWeightedMatroid(const MatroidSpec& spec);

// f(S) = rank(S).
SetFunction GenRankValuation(const MatroidSpec& spec);

// f(X) = w(X) + g[|X|] for a concave sequence g of length n + 1.
SetFunction GenModularPlusConcave(const PriceVector& w,
                                  std::span<const Rational> g);

// Adds +magnitude or -magnitude to one randomly chosen finite entry.
SetFunction Mutate(const SetFunction& f, std::uint64_t seed,
                   const Rational& magnitude);

struct EnumerationSpec {
  int n;
  std::vector<ExtValue> alphabet;
};

inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

// Streams every assignment of alphabet values to the 2^n subsets with a
// nonempty effective domain. The entry for the empty set is the most
// significant digit and digits follow alphabet order, so the stream is
// lexicographic.
class FunctionEnumerator {
 public:
  // Throws InputError for n outside 1..3, an empty alphabet, an alphabet
  // without finite values, or more than kMaxEnumeration functions.
  explicit FunctionEnumerator(EnumerationSpec spec);

  // Number of functions the stream yields.
  std::uint64_t count() const { return count_; }

  std::optional<SetFunction> Next();

 private:
  EnumerationSpec spec_;
  std::vector<std::size_t> digits_;
  std::uint64_t count_ = 0;
  bool done_ = false;
};

// Small deterministic random generator used throughout the corpus builders.
// Same seed, same sequence, on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();
  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// Random M♮-concave corpus member with integer values on n elements: a rank
// function, a weighted matroid, or a modular-plus-concave function.
SetFunction RandomMNaturalConcave(std::uint64_t seed, int n);

}  // namespace mexc

#endif  // MEXC_GENERATORS_H_
