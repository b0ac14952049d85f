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

#ifndef MEXC_IO_H_
#define MEXC_IO_H_

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "mexc/ext_value.h"
#include "mexc/set_function.h"
#include "mexc/verdict.h"

namespace mexc {

// Instance files:
//   {"kind":"set_function","n":3,
//    "entries":[{"set":[1,2],"value":2},{"set":[3],"value":"1/2"}, ...]}
//   {"kind":"set_family","n":3,"members":[[1,2],[1,3]]}
// Sets are sorted 1-based element lists. Subsets missing from "entries" are
// -inf. All format errors throw InputError.

SetFunction SetFunctionFromJson(const nlohmann::json& j);
SetFamily SetFamilyFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const SetFunction& f);
nlohmann::json ToJson(const SetFamily& family);

using Instance = std::variant<SetFunction, SetFamily>;

Instance InstanceFromJson(const nlohmann::json& j);
Instance LoadInstance(const std::filesystem::path& path);

// JSON value forms: integers as numbers, other rationals as "p/q", -inf as
// "-inf".
nlohmann::json ValueToJson(const ExtValue& v);
Rational RationalFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const PriceVector& p);
nlohmann::json ToJson(const Witness& w);
nlohmann::json ToJson(const Verdict& v);

}  // namespace mexc

#endif  // MEXC_IO_H_
