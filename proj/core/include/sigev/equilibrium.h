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

#ifndef SIGEV_EQUILIBRIUM_H_
#define SIGEV_EQUILIBRIUM_H_

#include <optional>
#include <string>
#include <vector>

#include "sigev/game.h"

namespace sigev {

// Closed interval [lo, hi] within [0, 1].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool Contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Receiver's gain from attacking rather than withdrawing at belief mu.
double AttackGain(const PayoffTable& payoffs, double mu);

// Beliefs mu in [0, 1] under which attacking with probability `attack` is a
// best response. For 0 < attack < 1 this is the indifference set.
std::optional<Interval> SupportingBeliefs(const PayoffTable& payoffs,
                                          double attack);

enum class Classification { kSeparating, kPooling, kPartialPooling, kMixed };

std::string ToString(Classification c);
std::optional<Classification> ParseClassification(const std::string& s);

// Classification from the sender strategy alone.
Classification Classify(const SenderStrategy& sender);

struct Equilibrium {
  SenderStrategy sender;
  ReceiverStrategy receiver;
  BeliefSystem beliefs;
  // One entry per receiver information set; set exactly for off-path ones.
  std::vector<std::optional<Interval>> belief_intervals;
  Utilities utilities;
  Classification classification = Classification::kPooling;
  // Every sender strategy supports the same receiver strategy and utilities
  // (complete-information case). `sender` is then a representative.
  bool any_sender_strategy = false;
};

// Completes a profile with Bayes-consistent on-path beliefs and, at every
// zero-probability information set, the interval of beliefs supporting the
// receiver's prescribed action (the belief itself is set to its lower end).
// Returns nullopt when some off-path action has no supporting belief.
std::optional<Equilibrium> CompleteEquilibrium(const GameSpec& spec,
                                               const SenderStrategy& sender,
                                               const ReceiverStrategy& receiver);

// Lexicographic order on (sender, receiver) probabilities.
bool StrategyLess(const Equilibrium& a, const Equilibrium& b);
// Max-abs distance between the strategy profiles of two equilibria.
double StrategyDistance(const Equilibrium& a, const Equilibrium& b);

// Applies the message relabeling n -> 1 - n to a strategy profile. Together
// with swapping epsilon and delta this maps a game onto an isomorphic one.
SenderStrategy RelabelMessages(const SenderStrategy& sender);
ReceiverStrategy RelabelMessages(const ReceiverStrategy& receiver);
// Applies e -> 1 - e to an evidence receiver strategy.
ReceiverStrategy RelabelEvidence(const ReceiverStrategy& receiver);

}  // namespace sigev

#endif  // SIGEV_EQUILIBRIUM_H_
