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

// Shared test helpers: seeded random games and brute-force oracles that do
// not go through the library's own Bayes or utility code.

#ifndef SIGEV_TESTS_TEST_UTIL_H_
#define SIGEV_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "sigev/analytic.h"
#include "sigev/equilibrium.h"
#include "sigev/game.h"
#include "sigev/numeric.h"

namespace sigev::testing {

inline PayoffTable RandomPayoffs(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-25.0, 25.0);
  std::array<double, 4> s{}, r{};
  for (auto& x : s) x = u(rng);
  for (auto& x : r) x = u(rng);
  return PayoffTable(s, r);
}

inline double Uniform(std::mt19937& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// epsilon > delta, both uniform.
inline DetectionRates RandomOrderedRates(std::mt19937& rng) {
  double a = Uniform(rng), b = Uniform(rng);
  if (a < b) std::swap(a, b);
  return {a, b};
}

inline bool NearRegionBoundary(const GameSpec& spec, double band = 1e-6) {
  const auto cb = ComputeCBConstants(spec.payoffs);
  return std::abs(spec.prior.p0() * cb.cb0 - spec.prior.p1() * cb.cb1) < band;
}

// Random evidence game away from the payoff-region boundary.
inline GameSpec RandomEvidenceGame(std::mt19937& rng) {
  while (true) {
    const auto rates = RandomOrderedRates(rng);
    GameSpec spec{RandomPayoffs(rng), Prior(Uniform(rng)),
                  DetectorModel::Symmetric(rates.epsilon, rates.delta)};
    if (!NearRegionBoundary(spec)) return spec;
  }
}

inline SenderStrategy RandomSender(std::mt19937& rng) {
  return SenderStrategy({Uniform(rng), Uniform(rng)});
}

inline ReceiverStrategy RandomReceiver(std::mt19937& rng, ReceiverKind kind) {
  if (kind == ReceiverKind::kNoEvidence) {
    return ReceiverStrategy::NoEvidence({Uniform(rng), Uniform(rng)});
  }
  return ReceiverStrategy::WithEvidence(
      {Uniform(rng), Uniform(rng), Uniform(rng), Uniform(rng)});
}

// Joint P(m, n, e) straight from the primitives.
inline double JointWeight(const GameSpec& spec, const SenderStrategy& s, int m,
                          int n, int e) {
  const double pm = m == 0 ? spec.prior.p0() : 1.0 - spec.prior.p0();
  const double pn = n == 1 ? s.send1(m) : 1.0 - s.send1(m);
  double pe = e == 0 ? 1.0 : 0.0;
  if (spec.detector) pe = spec.detector->lambda(e, m, n);
  return pm * pn * pe;
}

// Sum over all (m, n, e, y) outcomes.
inline Utilities BruteForceUtilities(const GameSpec& spec,
                                     const SenderStrategy& s,
                                     const ReceiverStrategy& r) {
  Utilities u;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (int e = 0; e < 2; ++e) {
        const double w = JointWeight(spec, s, m, n, e);
        if (w == 0.0) continue;
        const double a = r.attack(n, e);
        for (int y = 0; y < 2; ++y) {
          const double py = y == 1 ? a : 1.0 - a;
          u.sender += w * py * spec.payoffs.sender(y, m);
          u.receiver += w * py * spec.payoffs.receiver(y, m);
        }
      }
    }
  }
  return u;
}

inline int NumInfoSetsOf(const GameSpec& spec) {
  return spec.detector ? 4 : 2;
}

inline void InfoSetOf(const GameSpec& spec, int i, int* n, int* e) {
  if (spec.detector) {
    *n = i / 2;
    *e = i % 2;
  } else {
    *n = i;
    *e = 0;
  }
}

// Builds a candidate with Bayes beliefs from the joint distribution and the
// given beliefs at zero-probability information sets (interval [0, 1]).
inline Equilibrium CandidateWithBeliefs(const GameSpec& spec,
                                        const SenderStrategy& s,
                                        const ReceiverStrategy& r,
                                        const std::vector<double>& off_path) {
  Equilibrium eq;
  eq.sender = s;
  eq.receiver = r;
  const int k = NumInfoSetsOf(spec);
  eq.belief_intervals.assign(k, std::nullopt);
  if (spec.detector) eq.beliefs.after_evidence.emplace();
  size_t next = 0;
  for (int i = 0; i < k; ++i) {
    int n, e;
    InfoSetOf(spec, i, &n, &e);
    const double w0 = JointWeight(spec, s, 0, n, e);
    const double w1 = JointWeight(spec, s, 1, n, e);
    if (w0 + w1 > 0.0) {
      eq.beliefs.AtInfoSet(i) = {w1 / (w0 + w1), false};
    } else {
      eq.beliefs.AtInfoSet(i) = {off_path.at(next++), true};
      eq.belief_intervals[i] = Interval{0.0, 1.0};
    }
  }
  if (spec.detector) {
    for (int n = 0; n < 2; ++n) {
      const double w0 = JointWeight(spec, s, 0, n, 0) + JointWeight(spec, s, 0, n, 1);
      const double w1 = JointWeight(spec, s, 1, n, 0) + JointWeight(spec, s, 1, n, 1);
      eq.beliefs.after_message[n] =
          w0 + w1 > 0.0 ? Belief{w1 / (w0 + w1), false} : Belief{0.0, true};
    }
  }
  eq.utilities = BruteForceUtilities(spec, s, r);
  eq.classification = Classify(s);
  return eq;
}

inline int CountOffPath(const GameSpec& spec, const SenderStrategy& s) {
  int count = 0;
  for (int i = 0; i < NumInfoSetsOf(spec); ++i) {
    int n, e;
    InfoSetOf(spec, i, &n, &e);
    if (JointWeight(spec, s, 0, n, e) + JointWeight(spec, s, 1, n, e) == 0.0) {
      ++count;
    }
  }
  return count;
}

// Pure profiles that pass VerifyPbe for some choice of endpoint beliefs at
// the zero-probability information sets.
inline std::vector<PureProfile> BruteForcePurePbe(const GameSpec& spec,
                                                  double tol = 1e-9) {
  std::vector<PureProfile> out;
  for (const auto& p : AllPureProfiles(spec.receiver_kind())) {
    const int k = CountOffPath(spec, p.sender);
    for (int bits = 0; bits < (1 << k); ++bits) {
      std::vector<double> beliefs;
      for (int j = 0; j < k; ++j) beliefs.push_back((bits >> j) & 1);
      const auto eq = CandidateWithBeliefs(spec, p.sender, p.receiver, beliefs);
      if (VerifyPbe(spec, eq, tol).pass) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

inline std::array<double, 6> Flat(const SenderStrategy& s,
                                  const ReceiverStrategy& r) {
  std::array<double, 6> v{s.send1(0), s.send1(1)};
  for (int i = 0; i < r.num_info_sets(); ++i) v[2 + i] = r.attack(i);
  return v;
}

inline double MaxAbsDiff(const std::array<double, 6>& a,
                         const std::array<double, 6>& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Every pair in `a` has a partner in `b` within tol, and vice versa.
inline bool SameUtilitySets(const std::vector<Utilities>& a,
                            const std::vector<Utilities>& b, double tol) {
  auto covered = [tol](const std::vector<Utilities>& x,
                       const std::vector<Utilities>& y) {
    for (const auto& u : x) {
      bool hit = false;
      for (const auto& v : y) {
        hit = hit || (std::abs(u.sender - v.sender) <= tol &&
                      std::abs(u.receiver - v.receiver) <= tol);
      }
      if (!hit) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

inline std::vector<Utilities> UtilitiesOf(const std::vector<Equilibrium>& eqs) {
  std::vector<Utilities> out;
  for (const auto& eq : eqs) out.push_back(eq.utilities);
  return out;
}

// Standard-normal upper tail from the Maclaurin series of erf; independent of
// std::erf/erfc. Accurate to ~1e-15 for |z| <= 4.
inline double SeriesSurvival(double z) {
  const double x = z / std::sqrt(2.0);
  double term = x, sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-18) break;
  }
  const double erf = 2.0 / std::sqrt(std::acos(-1.0)) * sum;
  return 0.5 * (1.0 - erf);
}

inline PayoffTable BenchmarkPayoffs() {
  return PayoffTable({1, -10, 0, 5}, {0, 15, 0, -22});
}

}  // namespace sigev::testing

#endif  // SIGEV_TESTS_TEST_UTIL_H_
