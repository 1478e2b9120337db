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

// Numerical equilibrium machinery for the game with evidence: detector
// regions, pure-strategy enumeration, mixed-strategy support enumeration and
// an independent equilibrium verifier.

#ifndef SIGEV_NUMERIC_H_
#define SIGEV_NUMERIC_H_

#include <string>
#include <vector>

#include "sigev/equilibrium.h"
#include "sigev/game.h"

namespace sigev {

enum class DetectorRegionLabel {
  kWeak,
  kOmnipotent,
  kConservative,
  kAggressive,
  kIntermediate
};

std::string ToString(DetectorRegionLabel label);

struct DetectorRegion {
  DetectorRegionLabel label = DetectorRegionLabel::kWeak;
  double epsilon = 0.0;
  double delta = 0.0;
};

// Throws ValidationError when the kernel is not symmetric or epsilon < delta
// (relabel the evidence first).
DetectorRegion ClassifyDetector(const DetectorModel& detector,
                                double tol = kProbabilityTol);

struct SolveOptions {
  double deviation_tol = 1e-9;
  // Feasibility slack for the linear indifference systems and the snapping
  // distance to pure probabilities.
  double indifference_tol = 1e-10;
};

struct PureProfile {
  SenderStrategy sender;
  ReceiverStrategy receiver;
};

// The 4 x 2^k pure profiles, k the number of receiver information sets.
std::vector<PureProfile> AllPureProfiles(ReceiverKind kind);

// Every pure PBE. On-path beliefs come from the two-step update; an off-path
// action survives when some belief in [0, 1] supports it.
std::vector<Equilibrium> EnumeratePurePbe(const GameSpec& spec,
                                          const SolveOptions& opts = {});

// Support enumeration over {send 0, send 1, mix} per type and
// {withdraw, attack, mix} per information set. Returns every vertex solution
// that passes VerifyPbe, sorted and deduplicated. Throws SolverError when
// nothing survives.
std::vector<Equilibrium> SolveMixedPbe(const GameSpec& spec,
                                       const SolveOptions& opts = {});

struct Verdict {
  bool pass = false;
  double worst_gain = 0.0;
  std::vector<std::string> failures;
};

// Checks sender optimality per type, receiver optimality at the stated
// beliefs, Bayes consistency on path, off-path flags and intervals, and the
// stated utilities. Consistency is computed from the joint distribution of
// (m, n, e), independently of the two-step update. Throws ValidationError
// when the equilibrium's shape does not match the spec.
Verdict VerifyPbe(const GameSpec& spec, const Equilibrium& eq,
                  double tol = 1e-9);

}  // namespace sigev

#endif  // SIGEV_NUMERIC_H_
