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

#include "mexc/io.h"

#include <fstream>
#include <string>
#include <vector>

#include "mexc/errors.h"

namespace mexc {
namespace {

using nlohmann::json;

int ReadGroundSetSize(const json& j, int min_n) {
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw InputError("instance needs an integer field \"n\"");
  }
  const auto n = j["n"].get<std::int64_t>();
  if (n < min_n || n > kMaxGroundSetSize) {
    throw InputError("\"n\" must be in " + std::to_string(min_n) + ".." +
                     std::to_string(kMaxGroundSetSize));
  }
  return static_cast<int>(n);
}

void RequireKind(const json& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j["kind"] != kind) {
    throw InputError(std::string("expected an object with \"kind\":\"") +
                     kind + "\"");
  }
}

Subset ReadSubset(const json& j, int n) {
  if (!j.is_array()) throw InputError("a set must be a list of elements");
  std::vector<int> elements;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw InputError("set elements are integers");
    elements.push_back(e.get<int>());
  }
  return FromElements(elements, n);
}

json SubsetToJson(Subset s) { return ToElements(s); }

}  // namespace

Rational RationalFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  throw InputError("a value must be an integer or a \"p/q\" string, got " +
                   j.dump());
}

SetFunction SetFunctionFromJson(const json& j) {
  RequireKind(j, "set_function");
  const int n = ReadGroundSetSize(j, 1);
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw InputError("set_function needs an \"entries\" list");
  }
  std::vector<ExtValue> table(std::size_t{1} << n);
  std::vector<bool> seen(table.size(), false);
  for (const json& entry : j["entries"]) {
    if (!entry.is_object() || !entry.contains("set") ||
        !entry.contains("value")) {
      throw InputError("each entry needs \"set\" and \"value\"");
    }
    const Subset s = ReadSubset(entry["set"], n);
    if (seen[s]) {
      throw InputError("duplicate entry for set " + FormatSubset(s));
    }
    seen[s] = true;
    table[s] = RationalFromJson(entry["value"]);
  }
  return SetFunction(n, table);
}

SetFamily SetFamilyFromJson(const json& j) {
  RequireKind(j, "set_family");
  const int n = ReadGroundSetSize(j, 0);
  if (!j.contains("members") || !j["members"].is_array()) {
    throw InputError("set_family needs a \"members\" list");
  }
  std::vector<Subset> members;
  for (const json& m : j["members"]) members.push_back(ReadSubset(m, n));
  return SetFamily(n, members);
}

json ValueToJson(const ExtValue& v) {
  if (v.is_neg_inf()) return "-inf";
  if (v.value().is_integer()) return v.value().num();
  return v.value().ToString();
}

json ToJson(const SetFunction& f) {
  json entries = json::array();
  for (Subset s : f.domain()) {
    entries.push_back({{"set", SubsetToJson(s)}, {"value", ValueToJson(f.Eval(s))}});
  }
  return {{"kind", "set_function"}, {"n", f.n()}, {"entries", entries}};
}

json ToJson(const SetFamily& family) {
  json members = json::array();
  for (Subset s : family.members()) members.push_back(SubsetToJson(s));
  return {{"kind", "set_family"}, {"n", family.n()}, {"members", members}};
}

Instance InstanceFromJson(const json& j) {
  if (j.is_object() && j.contains("kind")) {
    if (j["kind"] == "set_function") return SetFunctionFromJson(j);
    if (j["kind"] == "set_family") return SetFamilyFromJson(j);
  }
  throw InputError(
      "instance must have \"kind\" \"set_function\" or \"set_family\"");
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return InstanceFromJson(j);
}

json ToJson(const PriceVector& p) {
  json out = json::array();
  for (const Rational& r : p.entries()) out.push_back(ValueToJson(r));
  return out;
}

json ToJson(const Witness& w) {
  json out = {{"condition", w.condition}};
  if (!w.sets.empty()) {
    json sets = json::object();
    for (const auto& [name, s] : w.sets) sets[name] = SubsetToJson(s);
    out["sets"] = sets;
  }
  if (!w.elements.empty()) {
    json elements = json::object();
    for (const auto& [name, e] : w.elements) elements[name] = e + 1;
    out["elements"] = elements;
  }
  if (!w.prices.empty()) {
    json prices = json::object();
    for (const auto& [name, p] : w.prices) prices[name] = ToJson(p);
    out["prices"] = prices;
  }
  if (w.lhs) out["lhs"] = ValueToJson(*w.lhs);
  if (w.rhs) out["rhs"] = ValueToJson(*w.rhs);
  return out;
}

json ToJson(const Verdict& v) {
  json out = {{"verdict", v.passed() ? "pass" : "fail"}};
  if (v.witness) out["witness"] = ToJson(*v.witness);
  if (v.samples > 0) out["samples"] = v.samples;
  return out;
}

}  // namespace mexc
