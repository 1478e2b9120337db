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

// Mechanism-design sweeps over the honeypot prior: equilibrium utility
// curves, the transition prior, the optimal honeypot fraction and the
// defender's benefit from (or loss to) a deception detector.

#ifndef SIGEV_SWEEP_H_
#define SIGEV_SWEEP_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sigev/game.h"
#include "sigev/numeric.h"

namespace sigev {

inline constexpr double kAmbiguitySpread = 1e-6;

struct SweepRow {
  double p0 = 0.0;
  std::string region;           // payoff region of the game without evidence
  std::string detector_region;  // "None" without a detector
  std::vector<Utilities> utilities;  // distinct pairs, sorted
  int n_equilibria = 0;
  bool ambiguous = false;
  // Some equilibrium conditions the receiver's action on the evidence at a
  // message sent with positive probability.
  bool evidence_dependent = false;
  // -1 / +1 for the left / right limit at the transition prior, else 0.
  int side = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool has_detector = false;
  std::optional<double> p0_star;
};

struct SweepOptions {
  // Without a detector, grid points within straddle_radius of the transition
  // prior become two half-rows holding the one-sided limits.
  bool straddle = true;
  double straddle_radius = 1e-6;
  SolveOptions solve;
};

// Throws ValidationError for grids outside [0, 1] or unsorted, and
// SolverError naming the offending p0 when a point cannot be solved.
SweepResult SweepPrior(const PayoffTable& payoffs,
                       const std::optional<DetectorModel>& detector,
                       const std::vector<double>& grid,
                       const SweepOptions& opts = {});

// n evenly spaced points from 0 to 1 inclusive (n >= 2).
std::vector<double> UniformGrid(int n);

// p0* = CB1 / (CB0 + CB1). Throws NoTransitionError when CB0 + CB1 <= 0 or
// the balance point falls outside [0, 1].
double TransitionPrior(const PayoffTable& payoffs);

struct HoneypotFraction {
  double p0 = 0.0;
  double sender_utility = 0.0;
};

// Best defend-favorable prior: p0* - margin when the pooling utility rises in
// p0, otherwise 0.
HoneypotFraction OptimalHoneypotFraction(const PayoffTable& payoffs,
                                         double margin);

// One selected utility pair per row: the largest U_S at the first row, then
// the pair nearest the previous selection.
std::vector<Utilities> SelectContinuous(const SweepResult& result);

struct BenefitRow {
  double p0 = 0.0;
  double us_with = 0.0;
  double us_without = 0.0;
  double benefit = 0.0;  // us_with - us_without
  double ur_with = 0.0;
  double ur_without = 0.0;
  bool ambiguous = false;
};

std::vector<BenefitRow> DetectorBenefit(const PayoffTable& payoffs,
                                        const DetectorModel& detector,
                                        const std::vector<double>& grid,
                                        const SolveOptions& solve = {});

// Header p0,region,detector_region,U_S,U_R,n_equilibria,ambiguous; one line
// per distinct utility pair.
void WriteSweepCsv(std::ostream& os, const SweepResult& result);
void WriteBenefitCsv(std::ostream& os, const std::vector<BenefitRow>& rows);

}  // namespace sigev

#endif  // SIGEV_SWEEP_H_
