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

#ifndef MEXC_SUBSET_H_
#define MEXC_SUBSET_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mexc {

// A subset of the ground set {1, ..., n} encoded as its characteristic
// bitset: element e (1-based) is bit e-1.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSetSize = 20;

inline constexpr Subset FullSet(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}
// `element` is 0-based here and in every bit-level helper.
inline constexpr Subset Bit(int element) { return Subset{1} << element; }
inline constexpr bool Contains(Subset s, int element) {
  return (s >> element) & 1U;
}
inline constexpr bool IsSubsetOf(Subset a, Subset b) { return (a & ~b) == 0; }
inline constexpr int Cardinality(Subset s) { return std::popcount(s); }

// Sorted 1-based element list, the external form of a subset.
std::vector<int> ToElements(Subset s);

// Inverse of ToElements. Throws InputError on elements outside 1..n,
// repeated elements or unsorted input.
Subset FromElements(std::span<const int> elements, int n);

// "{1,2,3}" / "{}".
std::string FormatSubset(Subset s);

// Calls fn(sub) for every sub ⊆ mask in increasing bitset order. Stops early
// and returns false as soon as fn returns false.
template <typename Fn>
bool ForEachSubsetOf(Subset mask, Fn&& fn) {
  Subset sub = 0;
  while (true) {
    if (!fn(sub)) return false;
    if (sub == mask) return true;
    sub = (sub - mask) & mask;
  }
}

// Calls fn(element) for each 0-based element of s in increasing order.
template <typename Fn>
void ForEachElement(Subset s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

}  // namespace mexc

#endif  // MEXC_SUBSET_H_
