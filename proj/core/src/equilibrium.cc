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

#include "sigev/equilibrium.h"

#include <algorithm>
#include <cmath>

namespace sigev {
namespace {

constexpr double kCrossingSlack = 1e-12;
constexpr double kPureSnap = 1e-12;

bool IsPure(double x) { return x <= kPureSnap || x >= 1.0 - kPureSnap; }

std::array<double, 6> Flatten(const Equilibrium& eq) {
  std::array<double, 6> v{eq.sender.send1(0), eq.sender.send1(1)};
  for (int i = 0; i < eq.receiver.num_info_sets(); ++i) {
    v[2 + i] = eq.receiver.attack(i);
  }
  return v;
}

}  // namespace

double AttackGain(const PayoffTable& u, double mu) {
  return (1.0 - mu) * (u.receiver(1, 0) - u.receiver(0, 0)) +
         mu * (u.receiver(1, 1) - u.receiver(0, 1));
}

std::optional<Interval> SupportingBeliefs(const PayoffTable& u,
                                          double attack) {
  // AttackGain(mu) = a - b mu.
  const double a = u.receiver(1, 0) - u.receiver(0, 0);
  const double b = a + (u.receiver(0, 1) - u.receiver(1, 1));

  if (!IsPure(attack)) {
    if (b == 0.0) {
      if (a == 0.0) return Interval{0.0, 1.0};
      return std::nullopt;
    }
    const double mu = a / b;
    if (mu < -kCrossingSlack || mu > 1.0 + kCrossingSlack) return std::nullopt;
    const double c = std::clamp(mu, 0.0, 1.0);
    return Interval{c, c};
  }

  // Attack: need a - b mu >= 0. Withdraw: negate both coefficients.
  const double sign = attack >= 0.5 ? 1.0 : -1.0;
  const double as = sign * a, bs = sign * b;
  if (bs == 0.0) {
    if (as >= 0.0) return Interval{0.0, 1.0};
    return std::nullopt;
  }
  const double cross = as / bs;
  if (bs > 0.0) {  // mu <= cross
    if (cross < -kCrossingSlack) return std::nullopt;
    return Interval{0.0, std::clamp(cross, 0.0, 1.0)};
  }
  // mu >= cross
  if (cross > 1.0 + kCrossingSlack) return std::nullopt;
  return Interval{std::clamp(cross, 0.0, 1.0), 1.0};
}

std::string ToString(Classification c) {
  switch (c) {
    case Classification::kSeparating:
      return "Separating";
    case Classification::kPooling:
      return "Pooling";
    case Classification::kPartialPooling:
      return "PartialPooling";
    case Classification::kMixed:
      return "Mixed";
  }
  return "Unknown";
}

std::optional<Classification> ParseClassification(const std::string& s) {
  for (auto c : {Classification::kSeparating, Classification::kPooling,
                 Classification::kPartialPooling, Classification::kMixed}) {
    if (ToString(c) == s) return c;
  }
  return std::nullopt;
}

Classification Classify(const SenderStrategy& sender) {
  const double s0 = sender.send1(0), s1 = sender.send1(1);
  if (std::abs(s0 - s1) <= kPureSnap) return Classification::kPooling;
  const bool pure0 = IsPure(s0), pure1 = IsPure(s1);
  if (pure0 && pure1) return Classification::kSeparating;
  if (pure0 || pure1) return Classification::kPartialPooling;
  return Classification::kMixed;
}

std::optional<Equilibrium> CompleteEquilibrium(
    const GameSpec& spec, const SenderStrategy& sender,
    const ReceiverStrategy& receiver) {
  const ReceiverKind kind = spec.receiver_kind();
  Equilibrium eq;
  eq.sender = sender;
  eq.receiver = receiver;
  eq.belief_intervals.assign(spec.num_info_sets(), std::nullopt);
  if (spec.detector) eq.beliefs.after_evidence.emplace();

  // Joint weights p(m) sigma_S(n|m) lambda(e|m,n) at each info set.
  for (int i = 0; i < spec.num_info_sets(); ++i) {
    const int n = InfoSetMessage(kind, i), e = InfoSetEvidence(kind, i);
    double w[2];
    for (int m = 0; m < 2; ++m) {
      w[m] = spec.prior.p(m) * sender.prob(n, m) * spec.emission(e, m, n);
    }
    Belief& b = eq.beliefs.AtInfoSet(i);
    if (w[0] + w[1] > 0.0) {
      b = {w[1] / (w[0] + w[1]), false};
      continue;
    }
    auto support = SupportingBeliefs(spec.payoffs, receiver.attack(i));
    if (!support) return std::nullopt;
    eq.belief_intervals[i] = support;
    b = {support->lo, true};
  }

  if (spec.detector) {
    for (int n = 0; n < 2; ++n) {
      if (auto mu = PosteriorFromMessage(spec, sender, n)) {
        eq.beliefs.after_message[n] = {*mu, false};
      } else {
        // Not a decision node in the evidence game; mirror the e = 0 belief.
        eq.beliefs.after_message[n] = {
            (*eq.beliefs.after_evidence)[InfoSetIndex(kind, n, 0)].honeypot,
            true};
      }
    }
  }

  eq.utilities = ExpectedUtilities(spec, sender, receiver);
  eq.classification = Classify(sender);
  return eq;
}

bool StrategyLess(const Equilibrium& a, const Equilibrium& b) {
  return Flatten(a) < Flatten(b);
}

double StrategyDistance(const Equilibrium& a, const Equilibrium& b) {
  const auto fa = Flatten(a), fb = Flatten(b);
  double d = 0.0;
  for (size_t i = 0; i < fa.size(); ++i) d = std::max(d, std::abs(fa[i] - fb[i]));
  return d;
}

SenderStrategy RelabelMessages(const SenderStrategy& sender) {
  return SenderStrategy({sender.prob(0, 0), sender.prob(0, 1)});
}

ReceiverStrategy RelabelMessages(const ReceiverStrategy& r) {
  if (r.kind() == ReceiverKind::kNoEvidence) {
    return ReceiverStrategy::NoEvidence({r.attack(1), r.attack(0)});
  }
  return ReceiverStrategy::WithEvidence(
      {r.attack(1, 0), r.attack(1, 1), r.attack(0, 0), r.attack(0, 1)});
}

ReceiverStrategy RelabelEvidence(const ReceiverStrategy& r) {
  if (r.kind() == ReceiverKind::kNoEvidence) return r;
  return ReceiverStrategy::WithEvidence(
      {r.attack(0, 1), r.attack(0, 0), r.attack(1, 1), r.attack(1, 0)});
}

}  // namespace sigev
