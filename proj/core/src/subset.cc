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

#include "mexc/subset.h"

#include "mexc/errors.h"

namespace mexc {

std::vector<int> ToElements(Subset s) {
  std::vector<int> out;
  out.reserve(Cardinality(s));
  ForEachElement(s, [&](int e) { out.push_back(e + 1); });
  return out;
}

Subset FromElements(std::span<const int> elements, int n) {
  Subset s = 0;
  int previous = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw InputError("element " + std::to_string(e) +
                       " outside ground set 1.." + std::to_string(n));
    }
    if (e <= previous) {
      throw InputError("subset elements must be strictly increasing");
    }
    previous = e;
    s |= Bit(e - 1);
  }
  return s;
}

std::string FormatSubset(Subset s) {
  std::string out = "{";
  bool first = true;
  ForEachElement(s, [&](int e) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(e + 1);
  });
  return out + "}";
}

}  // namespace mexc
