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

// Closed-form equilibria of the honeypot signaling game: receiver benefit
// constants, the three payoff regions, separating and pooling equilibria of
// the game without evidence, and the complete-information solution under an
// omnipotent detector.

#ifndef SIGEV_ANALYTIC_H_
#define SIGEV_ANALYTIC_H_

#include <string>
#include <vector>

#include "sigev/equilibrium.h"
#include "sigev/game.h"

namespace sigev {

inline constexpr double kBoundaryTol = 1e-9;

// cb0: receiver's relative benefit of attacking a normal system,
//      u^R(1,0) - u^R(0,0).
// cb1: receiver's relative benefit of withdrawing from a honeypot,
//      u^R(0,1) - u^R(1,1).
struct CBConstants {
  double cb0 = 0.0;
  double cb1 = 0.0;
};

CBConstants ComputeCBConstants(const PayoffTable& payoffs);

enum class PayoffRegionLabel {
  kAttackFavorable,
  kDefendFavorable,
  kNeitherFavorable
};

std::string ToString(PayoffRegionLabel label);

struct PayoffRegion {
  PayoffRegionLabel label = PayoffRegionLabel::kNeitherFavorable;
  double lhs = 0.0;  // p0 * cb0
  double rhs = 0.0;  // (1 - p0) * cb1
};

// |lhs - rhs| <= boundary_tol is reported as kNeitherFavorable.
PayoffRegion ClassifyPayoffRegion(const GameSpec& spec,
                                  double boundary_tol = kBoundaryTol);

// Checks truth-telling and inverting separation against every sequentially
// rational receiver response and returns the survivors. Works for arbitrary
// payoffs; for honeypot payoffs the list is empty.
std::vector<Equilibrium> SeparatingEquilibriaNoEvidence(const GameSpec& spec);

// Pool-on-0 and pool-on-1 with the receiver ignoring the message: always
// attack in the attack-favorable region, always withdraw in the
// defend-favorable one. Throws UnsupportedRegionError on the boundary and
// PreconditionError when the spec has a detector.
std::vector<Equilibrium> PoolingEquilibriaNoEvidence(
    const GameSpec& spec, double boundary_tol = kBoundaryTol);

// The same pair of pooling profiles with the receiver always playing
// `action`, without a region check. On the boundary both actions are
// sequentially rational.
std::vector<Equilibrium> PoolingEquilibriaWithAction(const GameSpec& spec,
                                                     int action);

// Closed-form pooling utilities when the receiver always plays `action`.
Utilities PoolingUtilities(const PayoffTable& payoffs, const Prior& prior,
                           int action);

// Complete-information solution under epsilon = 1, delta = 0: the receiver
// decodes the type from (n, e) and best-responds to it. Every sender strategy
// is an equilibrium strategy; the truthful one is returned as representative
// with `any_sender_strategy` set.
std::vector<Equilibrium> OmnipotentEquilibria(const GameSpec& spec,
                                              double tol = kProbabilityTol);

// Receiver's best response to a known type (ties: attack normal systems,
// withdraw from honeypots).
int BestResponseToType(const PayoffTable& payoffs, int m);

}  // namespace sigev

#endif  // SIGEV_ANALYTIC_H_
