// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgame/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qgame/advantage.h"
#include "qgame/io.h"
#include "qgame/optimizer.h"
#include "qgame/random.h"
#include "qgame/states.h"

namespace qgame {
namespace {

enum class Format { kJson, kCsv, kTable };

Format ParseFormat(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "table") return Format::kTable;
  throw InvalidInput("format must be json, csv or table");
}

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Scalars as CSV/table cells; arrays joined with ';', nested rows with '|'.
std::string Cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return Num(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  std::string s;
  const bool nested = !v.empty() && v[0].is_array();
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += nested ? "|" : ";";
    s += Cell(v[k]);
  }
  return s;
}

void EmitRecord(const Json& record, Format format, std::ostream& out) {
  switch (format) {
    case Format::kJson:
      out << record.dump(2) << "\n";
      break;
    case Format::kCsv:
      out << "key,value\n";
      for (const auto& [k, v] : record.items()) out << k << "," << Cell(v) << "\n";
      break;
    case Format::kTable: {
      size_t width = 0;
      for (const auto& [k, v] : record.items()) width = std::max(width, k.size());
      for (const auto& [k, v] : record.items()) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << k
            << (v.is_null() ? "-" : Cell(v)) << "\n";
      }
      break;
    }
  }
}

// Named inputs that need no files.
const std::vector<std::string> kBuiltins = {"entangled", "discord", "discord-rotated",
                                            "n3",        "n3alt",   "eq16basis",
                                            "computational"};

std::optional<ZeroDiscordState> BuiltinState(const std::string& name, int n,
                                             bool inject_fault = false) {
  const ReferenceStates refs = MakeReferenceStates();
  if (name == "n3") {
    if (inject_fault) {
      return ZeroDiscordState(refs.n3_zero_discord.basis(), WeightMatrix::Uniform(3));
    }
    return refs.n3_zero_discord;
  }
  if (name == "n3alt") return refs.n3_alternative;
  if (name == "eq16basis") {
    return ZeroDiscordState(PlusMinusTwoBasis(), WeightMatrix::Uniform(3));
  }
  if (name == "computational") {
    if (n < 2) throw InvalidInput("--n must be at least 2");
    return ZeroDiscordState(OrthonormalBasis::Computational(n), WeightMatrix::Uniform(n));
  }
  return std::nullopt;
}

DensityMatrix BuiltinDensity(const std::string& name, int n) {
  const ReferenceStates refs = MakeReferenceStates();
  if (name == "entangled") return refs.entangled;
  if (name == "discord") return refs.discord;
  if (name == "discord-rotated") return refs.discord_rotated;
  if (auto s = BuiltinState(name, n)) return Materialize(*s);
  throw InvalidInput("unknown builtin '" + name + "'");
}

ZeroDiscordState RequireBuiltinState(const std::string& name, int n) {
  if (auto s = BuiltinState(name, n)) return *s;
  if (std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end()) {
    throw InvalidInput("builtin '" + name + "' is not a zero-discord state");
  }
  throw InvalidInput("unknown builtin '" + name + "'");
}

void RequireOneSource(const std::string& file, const std::string& builtin,
                      const char* file_flag) {
  if (file.empty() == builtin.empty()) {
    throw InvalidInput(std::string("give exactly one of ") + file_flag + " or --builtin");
  }
}

// ---------------------------------------------------------------- reproduce

struct Row {
  std::string check;
  Json value;
  Json expected;
  std::string status;  // PASS, FAIL or INFO
};

int Reproduce(double tol, bool inject_fault, Format format, std::ostream& out) {
  const double ftol = std::max(tol, kReproduceFloatFloor);
  std::vector<Row> rows;
  auto close = [&](const std::string& check, double value, double expected) {
    rows.push_back({check, value, expected,
                    std::abs(value - expected) <= ftol ? "PASS" : "FAIL"});
  };
  auto info = [&](const std::string& check, double value, double expected) {
    rows.push_back({check, value, expected, "INFO"});
  };

  const ReferenceStates refs = MakeReferenceStates();
  const BimatrixGame g2 = DiceGame(2);
  const BimatrixGame g3 = DiceGame(3);

  close("entangled payoff (H on A, U1)",
        StrategyPayoff(refs.entangled, Hadamard(), Subsystem::kA, Side::kU1, g2), 1.0);
  close("discord payoff (H on A, U1)",
        StrategyPayoff(refs.discord, Hadamard(), Subsystem::kA, Side::kU1, g2), 0.5);
  const JointDistribution q =
      MeasureComputational(ApplyLocal(refs.discord, Hadamard(), Subsystem::kA));
  const double want[2][2] = {{0.375, 0.125}, {0.125, 0.375}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      close("discord outcome q(" + std::to_string(i) + "," + std::to_string(j) + ")",
            q(i, j), want[i][j]);
    }

  const ZeroDiscordState n3 = *BuiltinState("n3", 3, inject_fault);
  close("n3 QA side U1", BestResponseFor(n3, Side::kU1, g3).qa, 2.0 / 3.0);
  close("n3 QA side U2", BestResponseFor(n3, Side::kU2, g3).qa, 2.0 / 3.0);
  const OrthonormalBasis basis = PlusMinusTwoBasis();
  close("alternative P QA side U1 (as printed, quantum player first)",
        BestResponseFor(basis, refs.n3_alternative_verbatim, Side::kU1, g3).qa, 2.0 / 3.0);
  close("alternative P QA side U2 (as printed, quantum player first)",
        BestResponseFor(basis, refs.n3_alternative_verbatim, Side::kU2, g3).qa, 2.0 / 3.0);
  info("alternative P QA side U1 (symmetrized)",
       BestResponseFor(refs.n3_alternative, Side::kU1, g3).qa, 2.0 / 3.0);
  info("alternative P QA side U2 (symmetrized)",
       BestResponseFor(refs.n3_alternative, Side::kU2, g3).qa, 2.0 / 3.0);

  const auto exact_m = RationalizeMatrix(OverlapMatrix(basis), kOverlapMaxDenominator, 1e-12);
  const ExactRankTwoDependency dep = RankTwoBound(*exact_m);
  rows.push_back({"rank-two bound (exact)", ToString(dep.bound), "2/3",
                  dep.bound == Rational(2, 3) ? "PASS" : "FAIL"});
  const OptimizationResult opt = OptimizeWeights(basis, Side::kU1);
  const bool opt_ok = opt.exact_qa && *opt.exact_qa == Rational(2, 3);
  rows.push_back({"optimized QA over feasible P (exact)",
                  opt.exact_qa ? Json(ToString(*opt.exact_qa)) : Json(opt.qa), "2/3",
                  opt_ok ? "PASS" : "FAIL"});
  const RestrictedOptimum restricted =
      OptimizeRestricted(basis, MakeRestrictedFamily(OverlapMatrix(basis)), Side::kU1);
  info("restricted-family optimum", restricted.qa, opt.qa);

  for (int n = 2; n <= 4; ++n) {
    const UniqueEquilibrium ce = CePolytopeUnique(DiceGame(n));
    bool ok = ce.unique && ce.witness.has_value();
    if (ok) {
      for (const Rational& v : ce.witness->data()) ok = ok && v == Rational(1, n * n);
    }
    const std::string jn = "J/" + std::to_string(n * n);
    rows.push_back({"CE polytope n=" + std::to_string(n),
                    ok ? "unique " + jn : (ce.unique ? "unique, other point" : "not unique"),
                    "unique " + jn, ok ? "PASS" : "FAIL"});
  }

  bool passed = true;
  for (const Row& r : rows) passed = passed && r.status != "FAIL";

  switch (format) {
    case Format::kJson: {
      Json doc;
      doc["tol"] = tol;
      Json list = Json::array();
      for (const Row& r : rows) {
        Json j;
        j["check"] = r.check;
        j["value"] = r.value;
        j["expected"] = r.expected;
        j["status"] = r.status;
        list.push_back(std::move(j));
      }
      doc["rows"] = std::move(list);
      doc["passed"] = passed;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "check,value,expected,status\n";
      for (const Row& r : rows) {
        out << "\"" << r.check << "\"," << Cell(r.value) << "," << Cell(r.expected) << ","
            << r.status << "\n";
      }
      break;
    case Format::kTable: {
      size_t width = 0;
      for (const Row& r : rows) width = std::max(width, r.check.size());
      for (const Row& r : rows) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << r.check
            << std::setw(26) << Cell(r.value) << std::setw(22) << Cell(r.expected)
            << r.status << "\n";
      }
      out << (passed ? "all checks passed" : "some checks FAILED") << "\n";
      break;
    }
  }
  return passed ? kExitOk : kExitReproduceFailed;
}

// ---------------------------------------------------------------- scan

struct ScanSample {
  double guaranteed = 0.0;
  bool singleton = true;
};

ScanSample RunScanSample(int n, std::uint64_t seed, int index) {
  CounterRng rng(seed, static_cast<std::uint64_t>(index));
  const OrthonormalBasis basis = OrthonormalBasis::Random(n, rng);
  const FeasibleSet set = BuildFeasibleSet(basis);
  ScanSample s;
  s.singleton = set.singleton();
  RealMatrix p = s.singleton ? RealMatrix(n, n, 1.0 / (n * n))
                             : OptimizeWeights(basis, Side::kU1, 1).best_p;
  const ZeroDiscordState state(basis, WeightMatrix(std::move(p), 1e-9));
  s.guaranteed = MakeAdvantageReport(state, DiceGame(n)).guaranteed;
  return s;
}

int Scan(int n, int samples, std::uint64_t seed, double tol, Format format,
         std::ostream& out) {
  if (n < 2 || n > kMaxOptimizerDim) {
    throw InvalidInput("scan supports 2 <= n <= " + std::to_string(kMaxOptimizerDim));
  }
  if (samples < 0) throw InvalidInput("--samples must be nonnegative");

  std::vector<ScanSample> results(samples);
  const int threads = static_cast<int>(
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, 16u));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < samples; i += threads) results[i] = RunScanSample(n, seed, i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Decades 1e-16 .. 1, with catch-all bins below and above.
  constexpr int kLowExp = -16;
  std::vector<long> counts(-kLowExp + 2, 0);
  int exceed = 0, singletons = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (const ScanSample& s : results) {
    worst = std::max(worst, s.guaranteed);
    if (s.guaranteed > tol) ++exceed;
    if (s.singleton) ++singletons;
    int bin = 0;
    if (s.guaranteed >= 1.0) {
      bin = static_cast<int>(counts.size()) - 1;
    } else if (s.guaranteed >= std::pow(10.0, kLowExp)) {
      const int e = static_cast<int>(std::floor(std::log10(s.guaranteed)));
      bin = std::clamp(e - kLowExp + 1, 1, static_cast<int>(counts.size()) - 2);
    }
    ++counts[bin];
  }

  if (format == Format::kCsv) {
    out << "sample,guaranteed\n";
    for (int i = 0; i < samples; ++i) out << i << "," << Num(results[i].guaranteed) << "\n";
    return kExitOk;
  }

  Json doc;
  doc["n"] = n;
  doc["samples"] = samples;
  doc["seed"] = seed;
  doc["tol"] = tol;
  doc["exceedances"] = exceed;
  doc["singleton_feasible_sets"] = singletons;
  doc["max_guaranteed"] = samples ? Json(worst) : Json(nullptr);
  Json hist = Json::array();
  if (samples) {
    for (size_t b = 0; b < counts.size(); ++b) {
      Json bin;
      bin["lower"] = b == 0 ? Json(nullptr) : Json(std::pow(10.0, kLowExp + int(b) - 1));
      bin["upper"] = b + 1 == counts.size() ? Json(nullptr)
                                            : Json(std::pow(10.0, kLowExp + int(b)));
      bin["count"] = counts[b];
      hist.push_back(std::move(bin));
    }
  }
  doc["histogram"] = std::move(hist);
  if (format == Format::kJson) {
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  Json summary = doc;
  summary.erase("histogram");
  EmitRecord(summary, Format::kTable, out);
  for (const auto& bin : doc["histogram"]) {
    auto edge = [](const Json& v, const char* none) {
      return v.is_null() ? std::string(none) : v.dump();
    };
    const std::string lo = edge(bin["lower"], "-inf");
    const std::string hi = edge(bin["upper"], "inf");
    out << "  [" << lo << ", " << hi << ")  " << bin["count"].get<long>() << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Quantum dice games on shared zero-discord states", "qgame"};
  app.require_subcommand(1);

  std::string format_name = "json";
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  int samples = 200;
  int n = 0;
  int grid = kDefaultWitnessGrid;
  std::string builtin, state_file, basis_file, game_file, side_name = "U1";
  bool inject_fault = false;

  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };
  auto common = [&](CLI::App* sub) {
    format(sub);
    sub->add_option("--builtin", builtin, "built-in input")->check(CLI::IsMember(kBuiltins));
  };

  CLI::App* reproduce = app.add_subcommand("reproduce", "check the reference results");
  format(reproduce);
  reproduce->add_option("--tol", tol, "tolerance for float rows (floored at 1e-12)");
  reproduce->add_flag("--inject-fault", inject_fault)->group("");

  CLI::App* advantage = app.add_subcommand("advantage", "advantage report for a state");
  common(advantage);
  advantage->add_option("--state", state_file, "state JSON file");
  advantage->add_option("--game", game_file, "game JSON file (default: dice game)");
  advantage->add_option("--n", n, "dimension for --builtin computational");
  advantage->add_option("--tol", tol, "equilibrium tolerance");

  CLI::App* scan = app.add_subcommand("scan", "random bases against the no-advantage bound");
  format(scan);
  scan->add_option("--n", n, "dimension (2..5)")->required();
  scan->add_option("--samples", samples, "number of random bases");
  scan->add_option("--seed", seed, "64-bit seed");
  double scan_tol = 1e-8;
  scan->add_option("--tol", scan_tol, "exceedance threshold");

  CLI::App* optimize = app.add_subcommand("optimize", "maximize advantage over weights");
  common(optimize);
  optimize->add_option("--basis", basis_file, "basis or state JSON file");
  optimize->add_option("--side", side_name, "U1 or U2")->check(CLI::IsMember({"U1", "U2"}));
  optimize->add_option("--n", n, "dimension for --builtin computational");

  CLI::App* witness = app.add_subcommand("witness", "classical-quantum witness");
  common(witness);
  witness->add_option("--state", state_file, "density or state JSON file");
  witness->add_option("--grid", grid, "Bloch-sphere grid resolution");
  witness->add_option("--tol", tol, "refinement tolerance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qgame: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const Format format = ParseFormat(format_name);
    if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInput("--tol must be positive");

    if (reproduce->parsed()) return Reproduce(tol, inject_fault, format, out);

    if (advantage->parsed()) {
      RequireOneSource(state_file, builtin, "--state");
      const ZeroDiscordState s = state_file.empty()
                                     ? RequireBuiltinState(builtin, n ? n : 3)
                                     : StateFromJson(ReadJsonFile(state_file));
      const BimatrixGame game =
          game_file.empty() ? DiceGame(s.dim()) : GameFromJson(ReadJsonFile(game_file));
      EmitRecord(ToJson(MakeAdvantageReport(s, game, tol)), format, out);
      return kExitOk;
    }

    if (scan->parsed()) return Scan(n, samples, seed, scan_tol, format, out);

    if (optimize->parsed()) {
      RequireOneSource(basis_file, builtin, "--basis");
      const OrthonormalBasis basis = basis_file.empty()
                                         ? RequireBuiltinState(builtin, n ? n : 3).basis()
                                         : BasisFromJson(ReadJsonFile(basis_file));
      const OptimizationResult r = OptimizeWeights(basis, ParseSide(side_name));
      Json doc = ToJson(r);
      if (format == Format::kJson) {
        out << doc.dump(2) << "\n";
      } else {
        if (r.bound) {
          const RestrictedOptimum ro = OptimizeRestricted(
              basis, MakeRestrictedFamily(OverlapMatrix(basis)), r.side);
          doc["restricted_qa"] = ro.qa;
        }
        EmitRecord(doc, format, out);
      }
      return kExitOk;
    }

    if (witness->parsed()) {
      RequireOneSource(state_file, builtin, "--state");
      DensityMatrix rho = BuiltinDensity(builtin.empty() ? "entangled" : builtin, n ? n : 3);
      if (!state_file.empty()) {
        const Json j = ReadJsonFile(state_file);
        rho = j.contains("entries") ? DensityFromJson(j) : Materialize(StateFromJson(j));
      }
      if (grid < 2) throw InvalidInput("--grid must be at least 2");
      const double r = CqWitness(rho, tol, grid);
      Json doc;
      doc["residual"] = r;
      doc["threshold"] = kWitnessZeroThreshold;
      doc["verdict"] = r > kWitnessZeroThreshold ? "POSITIVE-DISCORD" : "CONSISTENT-WITH-ZERO";
      EmitRecord(doc, format, out);
      return kExitOk;
    }
  } catch (const NotAnEquilibrium& e) {
    err << "qgame: " << e.what() << "\nmax_violation " << Num(e.max_violation()) << "\n";
    return kExitNotEquilibrium;
  } catch (const Error& e) {
    err << "qgame: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "qgame: internal error: " << e.what() << "\n";
    return kExitReproduceFailed;
  }
  return kExitInputError;
}

}  // namespace qgame
