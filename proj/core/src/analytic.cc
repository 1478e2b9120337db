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

#include "sigev/analytic.h"

#include <algorithm>
#include <cmath>

#include "sigev/errors.h"

namespace sigev {
namespace {

constexpr double kTieTol = 1e-12;

void RequireNoDetector(const GameSpec& spec, const char* op) {
  if (spec.detector) {
    throw PreconditionError(std::string(op) +
                            " applies to the game without evidence");
  }
}

}  // namespace

CBConstants ComputeCBConstants(const PayoffTable& u) {
  return {u.receiver(1, 0) - u.receiver(0, 0),
          u.receiver(0, 1) - u.receiver(1, 1)};
}

std::string ToString(PayoffRegionLabel label) {
  switch (label) {
    case PayoffRegionLabel::kAttackFavorable:
      return "AttackFavorable";
    case PayoffRegionLabel::kDefendFavorable:
      return "DefendFavorable";
    case PayoffRegionLabel::kNeitherFavorable:
      return "NeitherFavorable";
  }
  return "Unknown";
}

PayoffRegion ClassifyPayoffRegion(const GameSpec& spec, double boundary_tol) {
  if (!(boundary_tol >= 0.0)) {
    throw ValidationError("boundary_tol must be nonnegative");
  }
  const CBConstants cb = ComputeCBConstants(spec.payoffs);
  PayoffRegion region;
  region.lhs = spec.prior.p0() * cb.cb0;
  region.rhs = spec.prior.p1() * cb.cb1;
  const double diff = region.lhs - region.rhs;
  if (std::abs(diff) <= boundary_tol) {
    region.label = PayoffRegionLabel::kNeitherFavorable;
  } else if (diff > 0.0) {
    region.label = PayoffRegionLabel::kAttackFavorable;
  } else {
    region.label = PayoffRegionLabel::kDefendFavorable;
  }
  return region;
}

std::vector<Equilibrium> SeparatingEquilibriaNoEvidence(const GameSpec& spec) {
  RequireNoDetector(spec, "SeparatingEquilibriaNoEvidence");
  std::vector<Equilibrium> out;
  for (const SenderStrategy& sender :
       {SenderStrategy::TruthTelling(), SenderStrategy::Inverting()}) {
    for (int a0 = 0; a0 < 2; ++a0) {
      for (int a1 = 0; a1 < 2; ++a1) {
        const auto receiver = ReceiverStrategy::NoEvidence(
            {static_cast<double>(a0), static_cast<double>(a1)});
        bool ok = true;
        // On-path messages reveal the type; the action must be a best
        // response to it.
        for (int m = 0; m < 2 && ok; ++m) {
          if (spec.prior.p(m) <= 0.0) continue;
          const int n = sender.send1(m) > 0.5 ? 1 : 0;
          const double gain = AttackGain(spec.payoffs, m);
          ok = receiver.attack(n) > 0.5 ? gain >= -kTieTol : gain <= kTieTol;
        }
        for (int m = 0; m < 2 && ok; ++m) {
          const int n = sender.send1(m) > 0.5 ? 1 : 0;
          ok = SenderMessageUtility(spec, receiver, m, 1 - n) <=
               SenderMessageUtility(spec, receiver, m, n) + kTieTol;
        }
        if (!ok) continue;
        if (auto eq = CompleteEquilibrium(spec, sender, receiver)) {
          out.push_back(std::move(*eq));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), StrategyLess);
  return out;
}

Utilities PoolingUtilities(const PayoffTable& u, const Prior& prior,
                           int action) {
  const double p0 = prior.p0();
  if (action == 1) {
    return {u.sender(1, 1) - p0 * (u.sender(1, 1) - u.sender(1, 0)),
            u.receiver(1, 1) - p0 * (u.receiver(1, 1) - u.receiver(1, 0))};
  }
  return {p0 * (u.sender(0, 0) - u.sender(0, 1)) + u.sender(0, 1),
          p0 * (u.receiver(0, 0) - u.receiver(0, 1)) + u.receiver(0, 1)};
}

std::vector<Equilibrium> PoolingEquilibriaWithAction(const GameSpec& spec,
                                                     int action) {
  RequireNoDetector(spec, "PoolingEquilibriaWithAction");
  const double a = action == 1 ? 1.0 : 0.0;
  const auto receiver = ReceiverStrategy::NoEvidence({a, a});
  std::vector<Equilibrium> out;
  for (int n = 0; n < 2; ++n) {
    auto eq = CompleteEquilibrium(spec, SenderStrategy::PoolOn(n), receiver);
    if (!eq) continue;
    eq->utilities = PoolingUtilities(spec.payoffs, spec.prior, action);
    out.push_back(std::move(*eq));
  }
  return out;
}

std::vector<Equilibrium> PoolingEquilibriaNoEvidence(const GameSpec& spec,
                                                     double boundary_tol) {
  RequireNoDetector(spec, "PoolingEquilibriaNoEvidence");
  const PayoffRegion region = ClassifyPayoffRegion(spec, boundary_tol);
  switch (region.label) {
    case PayoffRegionLabel::kAttackFavorable:
      return PoolingEquilibriaWithAction(spec, 1);
    case PayoffRegionLabel::kDefendFavorable:
      return PoolingEquilibriaWithAction(spec, 0);
    case PayoffRegionLabel::kNeitherFavorable:
      break;
  }
  throw UnsupportedRegionError(
      "pooling equilibria are not characterized in the neither-favorable "
      "region");
}

int BestResponseToType(const PayoffTable& payoffs, int m) {
  const CBConstants cb = ComputeCBConstants(payoffs);
  if (m == 0) return cb.cb0 >= 0.0 ? 1 : 0;
  return cb.cb1 >= 0.0 ? 0 : 1;
}

std::vector<Equilibrium> OmnipotentEquilibria(const GameSpec& spec,
                                              double tol) {
  if (!spec.detector) {
    throw PreconditionError("OmnipotentEquilibria requires a detector");
  }
  const auto rates = spec.detector->AsSymmetric(tol);
  if (!rates || std::abs(rates->epsilon - 1.0) > tol ||
      std::abs(rates->delta) > tol) {
    throw PreconditionError(
        "OmnipotentEquilibria requires epsilon = 1 and delta = 0");
  }
  const int act[2] = {BestResponseToType(spec.payoffs, 0),
                      BestResponseToType(spec.payoffs, 1)};
  std::array<double, 4> attack{};
  for (int n = 0; n < 2; ++n) {
    for (int e = 0; e < 2; ++e) {
      const int decoded = e == 1 ? 1 - n : n;
      attack[2 * n + e] = act[decoded];
    }
  }
  auto eq = CompleteEquilibrium(spec, SenderStrategy::TruthTelling(),
                                ReceiverStrategy::WithEvidence(attack));
  if (!eq) {
    throw SolverError("decoded receiver strategy has no supporting beliefs");
  }
  // Off-path (n, e) decode to a type; use that belief where it supports.
  for (int i = 0; i < 4; ++i) {
    auto& interval = eq->belief_intervals[i];
    if (!interval) continue;
    const double decoded = (i % 2 == 1) ? 1.0 - i / 2 : i / 2;
    if (interval->Contains(decoded)) {
      (*eq->beliefs.after_evidence)[i].honeypot = decoded;
    }
  }
  const PayoffTable& u = spec.payoffs;
  const double p0 = spec.prior.p0();
  eq->utilities = {p0 * u.sender(act[0], 0) + (1.0 - p0) * u.sender(act[1], 1),
                   p0 * u.receiver(act[0], 0) +
                       (1.0 - p0) * u.receiver(act[1], 1)};
  eq->any_sender_strategy = true;
  return {std::move(*eq)};
}

}  // namespace sigev
