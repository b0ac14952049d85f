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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "mexc/errors.h"
#include "mexc/ext_value.h"
#include "mexc/generators.h"
#include "mexc/io.h"
#include "mexc/rational.h"
#include "mexc/set_function.h"
#include "mexc/subset.h"
#include "support/instances.h"
#include "support/oracles.h"

namespace mexc {
namespace {

using ::mexc::testing::Comp;
using ::mexc::testing::Prices;
using ::mexc::testing::Rank2;
using ::mexc::testing::S;
using ::mexc::testing::Wmat;

TEST(RationalTest, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.ToString(), "-3/2");
  EXPECT_EQ(Rational(4, 2).ToString(), "2");
  EXPECT_THROW(Rational(1, 0), InputError);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 2).Floor(), -4);
  EXPECT_EQ(Rational(7, 2).Floor(), 3);
}

TEST(RationalTest, ParseRejectsDecimals) {
  EXPECT_EQ(Rational::Parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::Parse("-5"), Rational(-5));
  EXPECT_THROW(Rational::Parse("1.5"), InputError);
  EXPECT_THROW(Rational::Parse("1/0"), InputError);
  EXPECT_THROW(Rational::Parse(""), InputError);
  EXPECT_THROW(Rational::Parse("2/x"), InputError);
}

TEST(RationalTest, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), OverflowError);
  EXPECT_THROW(big * Rational(2), OverflowError);
}

TEST(ExtValueTest, NegInfConventions) {
  const ExtValue inf = ExtValue::NegInf();
  EXPECT_TRUE((inf + ExtValue(3)).is_neg_inf());
  EXPECT_TRUE((ExtValue(3) + inf).is_neg_inf());
  EXPECT_TRUE((inf + inf).is_neg_inf());
  EXPECT_LE(inf, inf);
  EXPECT_LT(inf, ExtValue(-1000000));
  EXPECT_EQ(Max(inf, ExtValue(2)), ExtValue(2));
  EXPECT_EQ(ExtValue().ToString(), "-inf");
  EXPECT_THROW(inf.value(), InputError);
}

TEST(SubsetTest, Encoding) {
  EXPECT_EQ(S({1, 3}), 0b101U);
  EXPECT_EQ(ToElements(0b110), (std::vector<int>{2, 3}));
  EXPECT_EQ(FormatSubset(0), "{}");
  EXPECT_EQ(FormatSubset(S({1, 2})), "{1,2}");
  const std::vector<int> bad = {2, 1};
  EXPECT_THROW(FromElements(bad, 3), InputError);
  const std::vector<int> out = {4};
  EXPECT_THROW(FromElements(out, 3), InputError);
  std::vector<Subset> seen;
  ForEachSubsetOf(0b101, [&](Subset s) {
    seen.push_back(s);
    return true;
  });
  EXPECT_EQ(seen, (std::vector<Subset>{0b000, 0b001, 0b100, 0b101}));
}

TEST(SetFunctionTest, EvalExamples) {
  EXPECT_EQ(Rank2().Eval(S({1, 2, 3})), ExtValue(2));
  EXPECT_TRUE(Wmat().Eval(S({1})).is_neg_inf());
  EXPECT_EQ(Comp().Eval(S({1, 2})), ExtValue(3));
  EXPECT_THROW(Rank2().Eval(S({4})), InputError);
}

TEST(SetFunctionTest, RejectsInvalidTables) {
  std::vector<ExtValue> empty_domain(4);
  EXPECT_THROW(SetFunction(2, empty_domain), InputError);
  std::vector<ExtValue> short_table(3, ExtValue(0));
  EXPECT_THROW(SetFunction(2, short_table), InputError);
  std::vector<ExtValue> one(1, ExtValue(0));
  EXPECT_THROW(SetFunction(0, one), InputError);
}

TEST(SetFunctionTest, MixedDenominators) {
  const SetFunction f = testing::Sparse(
      2, {{S({}), Rational(1, 2)}, {S({1}), Rational(2, 3)}, {S({2}), 5}});
  EXPECT_EQ(f.Eval(S({})), ExtValue(Rational(1, 2)));
  EXPECT_EQ(f.Eval(S({1})), ExtValue(Rational(2, 3)));
  EXPECT_EQ(f.denominator(), 6);
  EXPECT_EQ(f.MaxValue(), Rational(5));
  EXPECT_EQ(f.MinFiniteValue(), Rational(1, 2));
}

TEST(EffectiveDomainTest, Examples) {
  const SetFamily wmat = EffectiveDomain(Wmat());
  EXPECT_EQ(std::vector<Subset>(wmat.members().begin(), wmat.members().end()),
            (std::vector<Subset>{S({1, 2}), S({1, 3}), S({2, 3})}));
  EXPECT_EQ(EffectiveDomain(Rank2()).size(), 8U);
  EXPECT_EQ(EffectiveDomain(Comp()).size(), 4U);
}

TEST(ShiftByPriceTest, Examples) {
  EXPECT_EQ(ShiftByPrice(Rank2(), Prices({1, 1, 1})).Eval(S({1, 2})),
            ExtValue(0));
  EXPECT_EQ(ShiftByPrice(Comp(), Prices({0, 0})), Comp());
  EXPECT_EQ(ShiftByPrice(Wmat(), Prices({0, 0, 1})).Eval(S({2, 3})),
            ExtValue(2));
  EXPECT_THROW(ShiftByPrice(Wmat(), Prices({0, 0})), InputError);
}

TEST(ShiftByPriceTest, ComposesAndKeepsDomain) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(5));
    const SetFunction f = RandomMNaturalConcave(rng.Next(), n);
    auto random_prices = [&] {
      std::vector<Rational> v;
      for (int e = 0; e < n; ++e) v.emplace_back(rng.Between(-9, 9), 1 + rng.Below(4));
      return PriceVector(v);
    };
    const PriceVector p = random_prices();
    const PriceVector q = random_prices();
    EXPECT_EQ(ShiftByPrice(ShiftByPrice(f, p), q), ShiftByPrice(f, p + q));
    EXPECT_EQ(EffectiveDomain(ShiftByPrice(f, p)), EffectiveDomain(f));
    for (Subset s = 0; s < (Subset{1} << n); ++s) {
      EXPECT_EQ(ShiftByPrice(f, p).Eval(s), f.Eval(s) - p.Sum(s));
    }
  }
}

TEST(SliceTest, Rank2Example) {
  const SlicePair slice = Slice(Rank2(), S({1, 2}), S({3}), S({1}));
  EXPECT_EQ(slice.y0, S({3}));
  ASSERT_EQ(slice.dimension(), 1);
  EXPECT_EQ(slice.f1[0], ExtValue(1));
  EXPECT_EQ(slice.f1[1], ExtValue(2));
  EXPECT_EQ(slice.f2[0], ExtValue(2));
  EXPECT_EQ(slice.f2[1], ExtValue(1));
}

TEST(SliceTest, EqualSetsHaveEmptyY0) {
  const SetFunction f = Rank2();
  const SlicePair slice = Slice(f, S({1, 3}), S({1, 3}), 0);
  EXPECT_EQ(slice.dimension(), 0);
  ASSERT_EQ(slice.f1.size(), 1U);
  EXPECT_EQ(slice.f1[0], f.Eval(S({1, 3})));
  EXPECT_EQ(slice.f2[0], f.Eval(S({1, 3})));
}

TEST(SliceTest, WmatExample) {
  const SlicePair slice = Slice(Wmat(), S({1, 2}), S({2, 3}), S({1}));
  EXPECT_EQ(slice.y0, S({3}));
  EXPECT_TRUE(slice.f1[0].is_neg_inf());
  EXPECT_EQ(slice.f1[1], ExtValue(3));
  EXPECT_TRUE(slice.f2[0].is_neg_inf());
  EXPECT_EQ(slice.f2[1], ExtValue(1));
}

TEST(SliceTest, Preconditions) {
  EXPECT_THROW(Slice(Wmat(), S({1}), S({2, 3}), 0), PreconditionError);
  EXPECT_THROW(Slice(Rank2(), S({1, 2}), S({2}), S({2})), PreconditionError);
}

TEST(SliceTest, PrimalMatchesDirectEnumeration) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(5));
    const SetFunction f = trial % 2 == 0
                              ? RandomMNaturalConcave(rng.Next(), n)
                              : Mutate(RandomMNaturalConcave(rng.Next(), n),
                                       rng.Next(), 3);
    const auto dom = f.domain();
    const Subset x = dom[rng.Below(dom.size())];
    const Subset y = dom[rng.Below(dom.size())];
    Subset i = 0;
    ForEachElement(x & ~y, [&](int e) {
      if (rng.Below(2)) i |= Bit(e);
    });
    const SlicePair slice = Slice(f, x, y, i);
    EXPECT_EQ(slice.PrimalValue(), oracle::BestMultiple(f, x, y, i));
  }
}

TEST(IoTest, RoundTrip) {
  for (const SetFunction& f : {Rank2(), Wmat(), Comp()}) {
    EXPECT_EQ(SetFunctionFromJson(ToJson(f)), f);
  }
  const SetFunction half = testing::Sparse(1, {{S({1}), Rational(-3, 2)}});
  const nlohmann::json j = ToJson(half);
  EXPECT_EQ(j["entries"][0]["value"], "-3/2");
  EXPECT_EQ(SetFunctionFromJson(j), half);
}

TEST(IoTest, RejectsMalformedInput) {
  using nlohmann::json;
  EXPECT_THROW(SetFunctionFromJson(json::parse(
                   R"({"kind":"set_function","n":2,"entries":[]})")),
               InputError);
  EXPECT_THROW(
      SetFunctionFromJson(json::parse(
          R"({"kind":"set_function","n":2,"entries":[{"set":[1],"value":1},{"set":[1],"value":2}]})")),
      InputError);
  EXPECT_THROW(
      SetFunctionFromJson(json::parse(
          R"({"kind":"set_function","n":2,"entries":[{"set":[2,1],"value":1}]})")),
      InputError);
  EXPECT_THROW(
      SetFunctionFromJson(json::parse(
          R"({"kind":"set_function","n":2,"entries":[{"set":[1],"value":"0.5"}]})")),
      InputError);
  EXPECT_THROW(InstanceFromJson(json::parse(R"({"kind":"other"})")),
               InputError);
  EXPECT_THROW(LoadInstance("/nonexistent/file.json"), InputError);
}

TEST(IoTest, FamilyRoundTrip) {
  const std::vector<Subset> members = {S({1, 2}), S({3, 4})};
  const SetFamily family(4, members);
  const Instance back = InstanceFromJson(ToJson(family));
  ASSERT_TRUE(std::holds_alternative<SetFamily>(back));
  EXPECT_EQ(std::get<SetFamily>(back), family);
}

}  // namespace
}  // namespace mexc
