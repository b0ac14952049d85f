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

#ifndef MEXC_VERDICT_H_
#define MEXC_VERDICT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mexc/ext_value.h"
#include "mexc/set_function.h"
#include "mexc/subset.h"

namespace mexc {

// The tuple that violates a checked condition together with both sides of
// the violated inequality (when the condition is an inequality).
struct Witness {
  // Which condition failed, e.g. "mnat-exc", "local(ii)", "bnat-exc-pm(b)".
  std::string condition;
  std::vector<std::pair<std::string, Subset>> sets;
  std::vector<std::pair<std::string, int>> elements;  // 0-based
  std::vector<std::pair<std::string, PriceVector>> prices;
  std::optional<ExtValue> lhs;
  std::optional<ExtValue> rhs;

  // Lookup helpers; throw std::out_of_range for unknown names.
  Subset set(const std::string& name) const;
  int element(const std::string& name) const;
  const PriceVector& price(const std::string& name) const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Status { kPass, kFail };

struct Verdict {
  Status status = Status::kPass;
  std::optional<Witness> witness;
  // Number of price points examined by sampled checks; 0 for exact checks.
  std::int64_t samples = 0;

  bool passed() const { return status == Status::kPass; }

  static Verdict Pass(std::int64_t samples = 0) {
    return Verdict{Status::kPass, std::nullopt, samples};
  }
  static Verdict Fail(Witness w, std::int64_t samples = 0) {
    return Verdict{Status::kFail, std::move(w), samples};
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Human-readable one-line rendering of a witness (1-based elements).
std::string FormatWitness(const Witness& w);

}  // namespace mexc

#endif  // MEXC_VERDICT_H_
