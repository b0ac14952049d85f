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

#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mexc/duality.h"
#include "mexc/econ.h"
#include "mexc/errors.h"
#include "mexc/exchange.h"
#include "mexc/generators.h"
#include "mexc/io.h"

namespace mexc::cli {
namespace {

using nlohmann::json;

// Triple-quantified sweeps above this size need --force.
constexpr int kCheckSizeCap = 14;
// Duality box enumeration above this |Y \ X| needs --force.
constexpr int kDualitySizeCap = 10;

constexpr const char* kThreadsEnv = "MEXC_THREADS";

struct RunConfig {
  std::string command;
  std::string input;
  std::string property;
  std::string x, y, i;
  std::string prices;
  std::string box_radius;
  std::uint64_t seed = 0;
  std::int64_t count = 1000;
  std::string step = "1/2";
  std::string radius;
  std::string format = "human";
  bool force = false;
  bool no_timing = false;
  int threads = 0;
  // gen
  std::string kind;
  int k = -1;
  int n = -1;
  int vertices = -1;
  std::string weights;
  std::string edges;
  std::string blocks;
  std::string caps;
  std::string concave;
  std::string form = "weighted";
  std::string out_path;
};

std::vector<std::string> SplitList(const std::string& text, char sep) {
  std::vector<std::string> parts;
  if (text.empty() || text == "{}") return parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

std::vector<int> ParseInts(const std::string& text) {
  std::vector<int> out;
  std::string body = text;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
    body = body.substr(1, body.size() - 2);
  }
  for (const std::string& part : SplitList(body, ',')) {
    Rational r = Rational::Parse(part);
    if (!r.is_integer()) throw InputError("expected an integer, got " + part);
    out.push_back(static_cast<int>(r.num()));
  }
  return out;
}

Subset ParseSubset(const std::string& text, int n, const char* name) {
  try {
    return FromElements(ParseInts(text), n);
  } catch (const InputError& e) {
    throw InputError(std::string(name) + ": " + e.what());
  }
}

PriceVector ParsePrices(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& part : SplitList(text, ',')) {
    out.push_back(Rational::Parse(part));
  }
  return PriceVector(std::move(out));
}

int ThreadCount(const RunConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv(kThreadsEnv)) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void RequireSizeCap(const RunConfig& config, int n, int cap,
                    const std::string& what) {
  if (n > cap && !config.force) {
    throw InputError(what + " is limited to " + std::to_string(cap) +
                     " elements (got " + std::to_string(n) +
                     "); pass --force to run anyway");
  }
}

// Collects the report; prints it as JSON or as "key: value" lines.
class Report {
 public:
  Report(const RunConfig& config)
      : config_(config), start_(std::chrono::steady_clock::now()) {
    body_["command"] = config.command;
  }

  json& operator[](const char* key) { return body_[key]; }
  void Line(const std::string& text) { lines_.push_back(text); }

  int Emit(std::ostream& out, int status) {
    if (!config_.no_timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      body_["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(elapsed).count();
    }
    if (config_.format == "json") {
      out << body_.dump(2) << "\n";
    } else {
      for (const std::string& line : lines_) out << line << "\n";
      if (!config_.no_timing) {
        out << "elapsed_ms: " << body_["elapsed_ms"].get<double>() << "\n";
      }
    }
    return status;
  }

 private:
  const RunConfig& config_;
  std::chrono::steady_clock::time_point start_;
  json body_;
  std::vector<std::string> lines_;
};

std::string VerdictLine(const Verdict& v) {
  if (v.passed()) {
    return v.samples > 0 ? "pass (no violation found in " +
                               std::to_string(v.samples) + " samples)"
                         : "pass";
  }
  return "fail " + FormatWitness(*v.witness);
}

SetFunction RequireFunction(const Instance& instance, const std::string& what) {
  if (const auto* f = std::get_if<SetFunction>(&instance)) return *f;
  throw InputError(what + " needs a set_function instance");
}

int RunCheck(const RunConfig& config, std::ostream& out) {
  const Instance instance = LoadInstance(config.input);
  const bool is_family = std::holds_alternative<SetFamily>(instance);
  std::string property = config.property;
  if (property.empty()) property = is_family ? "bnat-exc" : "mnat-exc";
  const int n = is_family ? std::get<SetFamily>(instance).n()
                          : std::get<SetFunction>(instance).n();
  RequireSizeCap(config, n, kCheckSizeCap, "check");
  const SweepOptions options{ThreadCount(config)};

  std::optional<FamilyAxiom> axiom;
  if (property == "bnat-exc") axiom = FamilyAxiom::kExchange;
  if (property == "bnat-exc-m") axiom = FamilyAxiom::kMultipleExchange;
  if (property == "bnat-exc-pm") axiom = FamilyAxiom::kPlusMinus;

  Report report(config);
  Verdict verdict;
  if (axiom) {
    // A set function is judged by its effective domain.
    const SetFamily family =
        is_family ? std::get<SetFamily>(instance)
                  : EffectiveDomain(std::get<SetFunction>(instance));
    verdict = CheckFamily(family, *axiom, options);
  } else {
    const SetFunction f = RequireFunction(instance, "property " + property);
    if (property == "mnat-exc") {
      verdict = CheckSingleExchange(f, options);
    } else if (property == "mnat-exc-m") {
      verdict = CheckMultipleExchange(f, options);
    } else if (property == "snc") {
      verdict = CheckSnc(f, options);
    } else if (property == "valuated-matroid") {
      verdict = CheckValuatedMatroid(f, options);
    } else if (property == "local") {
      verdict = CheckLocal(f, options);
    } else {
      throw InputError("unknown property '" + property + "'");
    }
  }
  report["property"] = property;
  report["n"] = n;
  json v = ToJson(verdict);
  for (auto it = v.begin(); it != v.end(); ++it) report[it.key().c_str()] = it.value();
  report.Line("property " + property + ": " + VerdictLine(verdict));
  return report.Emit(out, verdict.passed() ? kExitPass : kExitFail);
}

int RunExchange(const RunConfig& config, std::ostream& out) {
  const Instance instance = LoadInstance(config.input);
  Report report(config);
  if (const auto* family = std::get_if<SetFamily>(&instance)) {
    const Subset x = ParseSubset(config.x, family->n(), "X");
    const Subset y = ParseSubset(config.y, family->n(), "Y");
    const Subset i = ParseSubset(config.i, family->n(), "I");
    const std::optional<Subset> j = FindBaseExchange(*family, x, y, i);
    report["found"] = j.has_value();
    if (j) {
      report["J"] = ToElements(*j);
      report.Line("J = " + FormatSubset(*j));
    } else {
      report.Line("no J with (X \\ I) ∪ J and (Y \\ J) ∪ I both members");
    }
    return report.Emit(out, j ? kExitPass : kExitFail);
  }

  const SetFunction& f = std::get<SetFunction>(instance);
  const Subset x = ParseSubset(config.x, f.n(), "X");
  const Subset y = ParseSubset(config.y, f.n(), "Y");
  const Subset i = ParseSubset(config.i, f.n(), "I");
  const auto certificate = FindExchangeSet(f, x, y, i);
  report["X"] = ToElements(x);
  report["Y"] = ToElements(y);
  report["I"] = ToElements(i);
  report["found"] = certificate.has_value();
  if (certificate) {
    const bool same_size = Cardinality(certificate->j_set) == Cardinality(i);
    report["J"] = ToElements(certificate->j_set);
    report["lhs"] = ValueToJson(certificate->lhs);
    report["rhs"] = ValueToJson(certificate->rhs);
    report["cardinality_matches"] = same_size;
    report.Line("J = " + FormatSubset(certificate->j_set) +
                (same_size ? " (|J| = |I|)" : ""));
    report.Line("lhs f(X)+f(Y) = " + certificate->lhs.ToString());
    report.Line("rhs f((X\\I)∪J)+f((Y\\J)∪I) = " + certificate->rhs.ToString());
    return report.Emit(out, kExitPass);
  }
  const ExtValue lhs = f.Eval(x) + f.Eval(y);
  const ExtValue best = BestExchangeValue(f, x, y, i);
  report["lhs"] = ValueToJson(lhs);
  report["best_rhs"] = ValueToJson(best);
  report.Line("no exchange set: lhs " + lhs.ToString() + " > best rhs " +
              best.ToString());
  return report.Emit(out, kExitFail);
}

int RunDuality(const RunConfig& config, std::ostream& out) {
  const SetFunction f = RequireFunction(LoadInstance(config.input), "duality");
  const Subset x = ParseSubset(config.x, f.n(), "X");
  const Subset y = ParseSubset(config.y, f.n(), "Y");
  const Subset i = ParseSubset(config.i, f.n(), "I");
  RequireSizeCap(config, Cardinality(y & ~x), kDualitySizeCap,
                 "duality over |Y \\ X|");
  DualSearchOptions options;
  if (!config.box_radius.empty()) {
    options.box_radius = Rational::Parse(config.box_radius);
  }
  const DualityReport result = FenchelGap(f, x, y, i, options);

  Report report(config);
  report["primal"] = ValueToJson(result.primal);
  report["dual"] = ValueToJson(result.dual);
  report["gap"] = result.gap ? ValueToJson(*result.gap) : json("inf");
  report["box_radius"] = ValueToJson(result.box_radius);
  report["visited"] = result.visited;
  report["exhaustive"] = result.exhaustive;
  report.Line("primal " + result.primal.ToString());
  report.Line("dual   " + result.dual.ToString());
  report.Line("gap    " + (result.gap ? result.gap->ToString() : "inf"));
  report.Line("box radius " + result.box_radius.ToString());
  if (result.q_star) {
    json q = json::object();
    std::string line = "q* =";
    const std::vector<int> y0 = ToElements(y & ~x);
    for (std::size_t k = 0; k < y0.size(); ++k) {
      q[std::to_string(y0[k])] = ValueToJson((*result.q_star)[k]);
      line += " q" + std::to_string(y0[k]) + "=" + (*result.q_star)[k].ToString();
    }
    report["q_star"] = q;
    report.Line(line);
  }
  return report.Emit(out, result.zero_gap() ? kExitPass : kExitFail);
}

int RunDemand(const RunConfig& config, std::ostream& out) {
  const SetFunction f = RequireFunction(LoadInstance(config.input), "demand");
  const PriceVector p = ParsePrices(config.prices);
  const DemandSet demand = Demand(f, p);
  Report report(config);
  json members = json::array();
  std::string line = "D(p) = {";
  bool first = true;
  for (Subset s : demand.members.members()) {
    members.push_back(ToElements(s));
    line += (first ? "" : ", ") + FormatSubset(s);
    first = false;
  }
  report["prices"] = ToJson(p);
  report["members"] = members;
  report["value"] = ValueToJson(demand.value);
  report.Line(line + "}");
  report.Line("max f[-p] = " + demand.value.ToString());
  return report.Emit(out, kExitPass);
}

int RunEquivalence(const RunConfig& config, std::ostream& out) {
  const SetFunction f =
      RequireFunction(LoadInstance(config.input), "equivalence");
  RequireSizeCap(config, f.n(), kCheckSizeCap, "equivalence");
  PriceSampler sampler;
  sampler.seed = config.seed;
  sampler.count = config.count;
  sampler.grid_step = Rational::Parse(config.step);
  if (!config.radius.empty()) sampler.radius = Rational::Parse(config.radius);
  sampler.threads = ThreadCount(config);
  const EquivalenceReport result =
      MakeEquivalenceReport(f, sampler, SweepOptions{sampler.threads});

  Report report(config);
  const std::pair<const char*, const Verdict*> rows[] = {
      {"mnat-exc", &result.single_exchange},
      {"mnat-exc-m/snc", &result.multiple_exchange},
      {"local", &result.local},
      {"gs", &result.gs},
      {"si", &result.si},
      {"nc", &result.nc},
      {"ncsim", &result.nc_simultaneous},
  };
  json table = json::object();
  bool all = true;
  for (const auto& [name, verdict] : rows) {
    table[name] = ToJson(*verdict);
    all = all && verdict->passed();
    report.Line(std::string(name) + ": " + VerdictLine(*verdict));
  }
  report["verdicts"] = table;
  return report.Emit(out, all ? kExitPass : kExitFail);
}

MatroidSpec BuildMatroid(const RunConfig& config) {
  MatroidSpec spec;
  if (config.kind == "uniform") {
    spec.kind = UniformMatroid{config.k, config.n};
  } else if (config.kind == "free") {
    spec.kind = FreeMatroid{config.n};
  } else if (config.kind == "graphic") {
    GraphicMatroid g;
    g.vertices = config.vertices;
    if (config.edges.empty()) {
      g = CompleteGraph(config.vertices);
    } else {
      for (const std::string& edge : SplitList(config.edges, ',')) {
        const auto dash = edge.find('-');
        if (dash == std::string::npos) {
          throw InputError("edges are written as a-b, got " + edge);
        }
        g.edges.emplace_back(std::stoi(edge.substr(0, dash)),
                             std::stoi(edge.substr(dash + 1)));
      }
    }
    spec.kind = g;
  } else if (config.kind == "partition") {
    PartitionMatroid m;
    for (const std::string& block : SplitList(config.blocks, '/')) {
      m.blocks.push_back(ParseInts(block));
    }
    m.capacities = ParseInts(config.caps);
    spec.kind = m;
  } else {
    throw InputError("unknown matroid kind '" + config.kind + "'");
  }
  if (!config.weights.empty()) spec.weights = ParsePrices(config.weights);
  return spec;
}

int RunGen(const RunConfig& config, std::ostream& out) {
  json instance;
  if (config.kind == "modular-concave") {
    const PriceVector w = ParsePrices(config.weights);
    const PriceVector g = ParsePrices(config.concave);
    instance = ToJson(GenModularPlusConcave(w, g.entries()));
  } else {
    MatroidSpec spec = BuildMatroid(config);
    const int n = GroundSetSize(spec);
    if (config.form == "weighted") {
      if (!spec.weights) spec.weights = PriceVector::Zero(n);
      instance = ToJson(GenWeightedMatroid(spec));
    } else if (config.form == "rank") {
      instance = ToJson(GenRankValuation(spec));
    } else if (config.form == "bases") {
      const std::vector<Subset> bases = MatroidBases(spec);
      instance = ToJson(SetFamily(n, bases));
    } else {
      throw InputError("unknown --form '" + config.form + "'");
    }
  }
  if (config.out_path.empty()) {
    out << instance.dump(2) << "\n";
  } else {
    std::ofstream file(config.out_path);
    if (!file) throw InputError("cannot write " + config.out_path);
    file << instance.dump(2) << "\n";
  }
  return kExitPass;
}

void AddCommon(CLI::App* sub, RunConfig& config) {
  sub->add_option("--format", config.format, "Report format")
      ->check(CLI::IsMember({"human", "json"}));
  sub->add_flag("--no-timing", config.no_timing,
                "Omit elapsed time so reports are byte-identical");
  sub->add_option("--threads", config.threads,
                  "Worker threads (default: $MEXC_THREADS or all cores)");
  sub->add_flag("--force", config.force, "Override size caps");
}

void AddTriple(CLI::App* sub, RunConfig& config) {
  sub->add_option("--X,-X", config.x, "X as a sorted list, e.g. 1,2")
      ->required();
  sub->add_option("--Y,-Y", config.y, "Y as a sorted list")->required();
  sub->add_option("--I,-I", config.i, "I ⊆ X \\ Y as a sorted list")
      ->required();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exchange-property verification for set functions", "mexc"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "Decide an exchange axiom");
  check->add_option("input", config.input, "Instance JSON file")->required();
  check->add_option("--property", config.property,
                    "mnat-exc | mnat-exc-m | valuated-matroid | local | snc | "
                    "bnat-exc | bnat-exc-m | bnat-exc-pm")
      ->check(CLI::IsMember({"mnat-exc", "mnat-exc-m", "valuated-matroid",
                             "local", "snc", "bnat-exc", "bnat-exc-m",
                             "bnat-exc-pm"}));
  AddCommon(check, config);

  CLI::App* exchange =
      app.add_subcommand("exchange", "Find a multiple-exchange set J");
  exchange->add_option("input", config.input, "Instance JSON file")->required();
  AddTriple(exchange, config);
  AddCommon(exchange, config);

  CLI::App* duality =
      app.add_subcommand("duality", "Verify the slice duality for (X, Y, I)");
  duality->add_option("input", config.input, "Instance JSON file")->required();
  AddTriple(duality, config);
  duality->add_option("--box-radius", config.box_radius,
                      "Dual search box half-width as p/q");
  AddCommon(duality, config);

  CLI::App* demand = app.add_subcommand("demand", "Compute D(p | f)");
  demand->add_option("input", config.input, "Instance JSON file")->required();
  demand->add_option("--prices,-p", config.prices, "Prices, e.g. 3/2,3/2")
      ->required();
  AddCommon(demand, config);

  CLI::App* equivalence = app.add_subcommand(
      "equivalence", "Exact and sampled checks of the equivalent conditions");
  equivalence->add_option("input", config.input, "Instance JSON file")
      ->required();
  equivalence->add_option("--seed", config.seed, "Sampler seed");
  equivalence->add_option("--count", config.count, "Random price samples");
  equivalence->add_option("--step", config.step, "Price grid step as p/q");
  equivalence->add_option("--radius", config.radius,
                          "Price box half-width (default 2*range+1)");
  AddCommon(equivalence, config);

  CLI::App* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--kind", config.kind,
                  "uniform | graphic | partition | free | modular-concave")
      ->required();
  gen->add_option("--k", config.k, "Uniform matroid rank");
  gen->add_option("--n", config.n, "Ground set size");
  gen->add_option("--vertices", config.vertices, "Graph vertices (<= 5)");
  gen->add_option("--edges", config.edges,
                  "Edges as a-b,c-d (default: complete graph)");
  gen->add_option("--blocks", config.blocks, "Partition blocks as 1,2/3");
  gen->add_option("--caps", config.caps, "Block capacities as 1,1");
  gen->add_option("--weights", config.weights, "Element weights");
  gen->add_option("--concave", config.concave,
                  "Concave sequence g0..gn for modular-concave");
  gen->add_option("--form", config.form, "weighted | rank | bases")
      ->check(CLI::IsMember({"weighted", "rank", "bases"}));
  gen->add_option("--out,-o", config.out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (check->parsed()) {
      config.command = "check";
      return RunCheck(config, out);
    }
    if (exchange->parsed()) {
      config.command = "exchange";
      return RunExchange(config, out);
    }
    if (duality->parsed()) {
      config.command = "duality";
      return RunDuality(config, out);
    }
    if (demand->parsed()) {
      config.command = "demand";
      return RunDemand(config, out);
    }
    if (equivalence->parsed()) {
      config.command = "equivalence";
      return RunEquivalence(config, out);
    }
    config.command = "gen";
    return RunGen(config, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace mexc::cli
