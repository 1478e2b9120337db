// Copyright 2026 The sigev Authors
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

#include "cli.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sigev/analytic.h"
#include "sigev/detector.h"
#include "sigev/errors.h"
#include "sigev/json_io.h"
#include "sigev/numeric.h"
#include "sigev/sweep.h"

namespace sigev {
namespace {

void WriteError(std::ostream& err, const std::string& kind,
                const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

// "LO:HI:STEP" -> LO, LO+STEP, ... <= HI.
std::vector<double> ParseRange(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad threshold range \"" + spec + "\"");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw ValidationError("threshold range must be LO:HI:STEP with STEP > 0");
  }
  std::vector<double> grid;
  const double slack = 1e-9 * parts[2];
  for (long i = 0;; ++i) {
    const double t = parts[0] + static_cast<double>(i) * parts[2];
    if (t > parts[1] + slack) break;
    grid.push_back(t);
    if (grid.size() > 1000000) throw ValidationError("threshold range too long");
  }
  return grid;
}

Json ClassifyReport(const GameSpec& spec) {
  const CBConstants cb = ComputeCBConstants(spec.payoffs);
  const PayoffRegion region = ClassifyPayoffRegion(spec);
  Json j;
  j["payoff_region"] = ToString(region.label);
  j["lhs"] = Round12(region.lhs);
  j["rhs"] = Round12(region.rhs);
  j["cb0"] = Round12(cb.cb0);
  j["cb1"] = Round12(cb.cb1);
  try {
    j["p0_star"] = Round12(TransitionPrior(spec.payoffs));
  } catch (const NoTransitionError&) {
    j["p0_star"] = nullptr;
  }
  if (spec.detector) {
    const DetectorRegion dr = ClassifyDetector(*spec.detector);
    j["detector_region"] = {{"label", ToString(dr.label)},
                            {"epsilon", Round12(dr.epsilon)},
                            {"delta", Round12(dr.delta)}};
  } else {
    j["detector_region"] = nullptr;
  }
  return j;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Signaling games with deception detection"};
  app.name("sigev");
  app.require_subcommand(1);

  std::string game_path, eq_path, timing_path, thresholds, options_path;
  bool mixed = false, compare = false;
  double tol = 1e-9;
  int grid = 101;

  auto* solve = app.add_subcommand("solve", "List equilibria as JSON");
  solve->add_option("--game", game_path, "Game spec JSON")->required();
  solve->add_flag("--mixed", mixed, "Add support-enumeration results");
  solve->add_option("--tol", tol, "Deviation tolerance");
  solve->add_option("--options", options_path, "Solve options JSON");

  auto* classify =
      app.add_subcommand("classify", "Payoff and detector regions as JSON");
  classify->add_option("--game", game_path, "Game spec JSON")->required();

  auto* sweep = app.add_subcommand("sweep", "Utility curves over p0 as CSV");
  sweep->add_option("--game", game_path, "Game spec JSON")->required();
  sweep->add_option("--grid", grid, "Number of p0 grid points")
      ->check(CLI::Range(2, 1000000));
  sweep->add_flag("--compare-no-detector", compare,
                  "Compare against the game without a detector");

  auto* detector =
      app.add_subcommand("detector", "Detection rates from a timing model");
  detector->add_option("--timing", timing_path, "Timing model JSON")
      ->required();
  detector->add_option("--sweep-thresholds", thresholds,
                       "LO:HI:STEP threshold grid (CSV output)");

  auto* verify = app.add_subcommand("verify", "Check an equilibrium");
  verify->add_option("--game", game_path, "Game spec JSON")->required();
  verify->add_option("--equilibrium", eq_path,
                     "Equilibrium JSON (object or array)")
      ->required();
  verify->add_option("--tol", tol, "Deviation tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    WriteError(err, "usage", e.what());
    return 1;
  }

  try {
    if (*solve) {
      const GameSpec spec = GameSpecFromJson(ReadJsonFile(game_path));
      SolveOptions opts;
      if (!options_path.empty()) {
        opts = SolveOptionsFromJson(ReadJsonFile(options_path));
      }
      if (solve->count("--tol") > 0) opts.deviation_tol = tol;
      std::vector<Equilibrium> eqs = EnumeratePurePbe(spec, opts);
      if (mixed) {
        for (auto& eq : SolveMixedPbe(spec, opts)) {
          bool dup = false;
          for (const auto& have : eqs) {
            dup = dup || StrategyDistance(have, eq) <= 1e-9;
          }
          if (!dup) eqs.push_back(std::move(eq));
        }
        std::sort(eqs.begin(), eqs.end(), StrategyLess);
      }
      Json list = Json::array();
      for (const auto& eq : eqs) list.push_back(ToJson(eq, spec));
      out << list.dump(2) << '\n';
    } else if (*classify) {
      const GameSpec spec = GameSpecFromJson(ReadJsonFile(game_path));
      out << ClassifyReport(spec).dump(2) << '\n';
    } else if (*sweep) {
      const GameSpec spec = GameSpecFromJson(ReadJsonFile(game_path));
      const std::vector<double> p0s = UniformGrid(grid);
      if (compare) {
        if (!spec.detector) {
          throw ValidationError("--compare-no-detector needs a detector");
        }
        WriteBenefitCsv(out, DetectorBenefit(spec.payoffs, *spec.detector, p0s));
      } else {
        WriteSweepCsv(out, SweepPrior(spec.payoffs, spec.detector, p0s));
      }
    } else if (*detector) {
      const TimingSpec timing = TimingSpecFromJson(ReadJsonFile(timing_path));
      if (!thresholds.empty()) {
        out << "t_d,delta,epsilon\n";
        for (const auto& row :
             ThresholdSweep(timing.model, ParseRange(thresholds))) {
          out << FormatNumber(row.t_d) << ',' << FormatNumber(row.delta)
              << ',' << FormatNumber(row.epsilon) << '\n';
        }
      } else {
        if (!timing.threshold) {
          throw ValidationError("timing spec needs t_d without a sweep");
        }
        const DetectorRates r = RatesFromThreshold(timing.model, *timing.threshold);
        Json j{{"t_d", Round12(timing.threshold->t_d)},
               {"delta", Round12(r.delta)},
               {"epsilon", Round12(r.epsilon)}};
        try {
          j["detector_region"] = ToString(
              ClassifyDetector(DetectorModel::Symmetric(r.epsilon, r.delta))
                  .label);
        } catch (const ValidationError&) {
          j["detector_region"] = nullptr;
        }
        out << j.dump(2) << '\n';
      }
    } else if (*verify) {
      const GameSpec spec = GameSpecFromJson(ReadJsonFile(game_path));
      const Json doc = ReadJsonFile(eq_path);
      if (doc.is_array()) {
        Json verdicts = Json::array();
        for (const auto& item : doc) {
          verdicts.push_back(
              ToJson(VerifyPbe(spec, EquilibriumFromJson(item, spec), tol)));
        }
        out << verdicts.dump(2) << '\n';
      } else {
        out << ToJson(VerifyPbe(spec, EquilibriumFromJson(doc, spec), tol))
                   .dump(2)
            << '\n';
      }
    }
  } catch (const SolverError& e) {
    WriteError(err, "solver", e.what());
    return 2;
  } catch (const ValidationError& e) {
    WriteError(err, "validation", e.what());
    return 1;
  } catch (const Json::exception& e) {
    WriteError(err, "validation", e.what());
    return 1;
  }
  return 0;
}

}  // namespace sigev
