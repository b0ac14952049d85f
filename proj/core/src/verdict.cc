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

#include "mexc/verdict.h"

#include <stdexcept>

namespace mexc {

Subset Witness::set(const std::string& name) const {
  for (const auto& [key, value] : sets) {
    if (key == name) return value;
  }
  throw std::out_of_range("witness has no set named " + name);
}

int Witness::element(const std::string& name) const {
  for (const auto& [key, value] : elements) {
    if (key == name) return value;
  }
  throw std::out_of_range("witness has no element named " + name);
}

const PriceVector& Witness::price(const std::string& name) const {
  for (const auto& [key, value] : prices) {
    if (key == name) return value;
  }
  throw std::out_of_range("witness has no price named " + name);
}

std::string FormatWitness(const Witness& w) {
  std::string out = w.condition + ":";
  for (const auto& [name, p] : w.prices) {
    out += " " + name + "=(";
    for (int e = 0; e < p.size(); ++e) {
      if (e > 0) out += ",";
      out += p[e].ToString();
    }
    out += ")";
  }
  for (const auto& [name, s] : w.sets) out += " " + name + "=" + FormatSubset(s);
  for (const auto& [name, e] : w.elements) {
    out += " " + name + "=" + std::to_string(e + 1);
  }
  if (w.lhs) out += " lhs=" + w.lhs->ToString();
  if (w.rhs) out += " rhs=" + w.rhs->ToString();
  return out;
}

}  // namespace mexc
