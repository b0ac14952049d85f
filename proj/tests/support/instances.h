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

#ifndef MEXC_TESTS_SUPPORT_INSTANCES_H_
#define MEXC_TESTS_SUPPORT_INSTANCES_H_

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mexc/ext_value.h"
#include "mexc/set_function.h"
#include "mexc/subset.h"

namespace mexc::testing {

// 1-based element list to bitset; S({}) is the empty set.
inline Subset S(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= Bit(e - 1);
  return s;
}

// Function with the listed entries and -inf everywhere else.
inline SetFunction Sparse(int n,
                          std::initializer_list<std::pair<Subset, Rational>>
                              entries) {
  std::vector<ExtValue> table(std::size_t{1} << n);
  for (const auto& [s, v] : entries) table[s] = v;
  return SetFunction(n, table);
}

template <typename Fn>
SetFunction Tabulate(int n, Fn&& fn) {
  std::vector<ExtValue> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) table[s] = fn(s);
  return SetFunction(n, table);
}

// min(|S|, 2) on three elements.
inline SetFunction Rank2() {
  return Tabulate(3, [](Subset s) {
    return ExtValue(std::min(Cardinality(s), 2));
  });
}

// w = (0, 1, 2) on the 2-subsets of three elements.
inline SetFunction Wmat() {
  return Sparse(3, {{S({1, 2}), 1}, {S({1, 3}), 2}, {S({2, 3}), 3}});
}

// The complementary pair: f({1,2}) = 3 exceeds f({1}) + f({2}).
inline SetFunction Comp() {
  return Sparse(2, {{S({}), 0}, {S({1}), 1}, {S({2}), 1}, {S({1, 2}), 3}});
}

inline PriceVector Prices(std::initializer_list<Rational> entries) {
  return PriceVector(std::vector<Rational>(entries));
}

}  // namespace mexc::testing

#endif  // MEXC_TESTS_SUPPORT_INSTANCES_H_
