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

// Randomized invariants. Every generator is seeded so failures reproduce.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sigev/analytic.h"
#include "sigev/detector.h"
#include "sigev/errors.h"
#include "sigev/numeric.h"
#include "sigev/sweep.h"
#include "test_util.h"

namespace sigev {
namespace {

using namespace sigev::testing;

constexpr int kGames = 200;

GameSpec WithRates(const GameSpec& spec, double eps, double delta) {
  return {spec.payoffs, spec.prior, DetectorModel::Symmetric(eps, delta)};
}

TEST(BeliefProperty, PosteriorsAreProbabilities) {
  std::mt19937 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const auto rates = RandomOrderedRates(rng);
    const GameSpec spec{RandomPayoffs(rng), Prior(Uniform(rng)),
                        DetectorModel::Symmetric(rates.epsilon, rates.delta)};
    const auto s = RandomSender(rng);
    for (int n = 0; n < 2; ++n) {
      const auto mu = PosteriorFromMessage(spec, s, n);
      if (!mu) continue;
      EXPECT_GE(*mu, 0.0);
      EXPECT_LE(*mu, 1.0);
      for (int e = 0; e < 2; ++e) {
        if (auto post = PosteriorFromEvidence(*spec.detector, *mu, n, e)) {
          EXPECT_GE(*post, 0.0);
          EXPECT_LE(*post, 1.0);
        }
      }
    }
  }
}

TEST(BeliefProperty, PosteriorsAverageBackToPrior) {
  std::mt19937 rng(12);
  for (int t = 0; t < 2000; ++t) {
    const GameSpec spec{RandomPayoffs(rng), Prior(Uniform(rng)), std::nullopt};
    const auto s = RandomSender(rng);
    double avg = 0.0;
    for (int n = 0; n < 2; ++n) {
      const double reach = spec.prior.p0() * s.prob(n, 0) +
                           spec.prior.p1() * s.prob(n, 1);
      if (auto mu = PosteriorFromMessage(spec, s, n)) avg += reach * *mu;
    }
    EXPECT_NEAR(avg, spec.prior.p1(), 1e-12);
  }
}

TEST(BeliefProperty, TypeBlindEvidenceCarriesNoInformation) {
  std::mt19937 rng(13);
  for (int t = 0; t < 2000; ++t) {
    const double c0 = Uniform(rng), c1 = Uniform(rng);
    // lambda(1 | m, n) depends on n only.
    const DetectorModel d({c0, c0, c1, c1});
    const double mu = Uniform(rng);
    for (int n = 0; n < 2; ++n) {
      for (int e = 0; e < 2; ++e) {
        if (auto post = PosteriorFromEvidence(d, mu, n, e)) {
          EXPECT_NEAR(*post, mu, 1e-12);
        }
      }
    }
  }
}

TEST(BeliefProperty, TwoStepUpdateMatchesJointDistribution) {
  std::mt19937 rng(14);
  for (int t = 0; t < 2000; ++t) {
    const GameSpec spec = RandomEvidenceGame(rng);
    const auto s = RandomSender(rng);
    for (int n = 0; n < 2; ++n) {
      const auto mu = PosteriorFromMessage(spec, s, n);
      for (int e = 0; e < 2; ++e) {
        const double w0 = JointWeight(spec, s, 0, n, e);
        const double w1 = JointWeight(spec, s, 1, n, e);
        if (w0 + w1 == 0.0) continue;
        ASSERT_TRUE(mu.has_value());
        const auto post = PosteriorFromEvidence(*spec.detector, *mu, n, e);
        ASSERT_TRUE(post.has_value());
        EXPECT_NEAR(*post, w1 / (w0 + w1), 1e-12);
      }
    }
  }
}

TEST(UtilityProperty, MatchesBruteForceSum) {
  std::mt19937 rng(15);
  for (int t = 0; t < 2000; ++t) {
    GameSpec spec = RandomEvidenceGame(rng);
    if (t % 2 == 0) spec.detector.reset();
    const auto s = RandomSender(rng);
    const auto r = RandomReceiver(rng, spec.receiver_kind());
    const auto a = ExpectedUtilities(spec, s, r);
    const auto b = BruteForceUtilities(spec, s, r);
    EXPECT_NEAR(a.sender, b.sender, 1e-12);
    EXPECT_NEAR(a.receiver, b.receiver, 1e-12);
  }
}

TEST(UtilityProperty, MessageRelabelWithSwappedRates) {
  std::mt19937 rng(16);
  for (int t = 0; t < 2000; ++t) {
    const GameSpec spec = RandomEvidenceGame(rng);
    const auto rates = *spec.detector->AsSymmetric();
    const GameSpec mirrored = WithRates(spec, rates.delta, rates.epsilon);
    const auto s = RandomSender(rng);
    const auto r = RandomReceiver(rng, ReceiverKind::kWithEvidence);
    const auto a = ExpectedUtilities(spec, s, r);
    const auto b = ExpectedUtilities(mirrored, RelabelMessages(s),
                                     RelabelMessages(r));
    EXPECT_NEAR(a.sender, b.sender, 1e-12);
    EXPECT_NEAR(a.receiver, b.receiver, 1e-12);
  }
}

TEST(UtilityProperty, EvidenceRelabelWithComplementedRates) {
  std::mt19937 rng(17);
  for (int t = 0; t < 2000; ++t) {
    const GameSpec spec = RandomEvidenceGame(rng);
    const auto rates = *spec.detector->AsSymmetric();
    const GameSpec flipped =
        WithRates(spec, 1.0 - rates.epsilon, 1.0 - rates.delta);
    const auto s = RandomSender(rng);
    const auto r = RandomReceiver(rng, ReceiverKind::kWithEvidence);
    const auto a = ExpectedUtilities(spec, s, r);
    const auto b = ExpectedUtilities(flipped, s, RelabelEvidence(r));
    EXPECT_NEAR(a.sender, b.sender, 1e-12);
    EXPECT_NEAR(a.receiver, b.receiver, 1e-12);
  }
}

// Swapping the two rates while relabeling only the evidence changes how often
// a truthful sender triggers the detector (delta before, 1 - epsilon after).
TEST(UtilityProperty, RateSwapWithEvidenceRelabelAloneIsNotASymmetry) {
  const GameSpec spec{BenchmarkPayoffs(), Prior(0.5),
                      DetectorModel::Symmetric(0.8, 0.5)};
  const GameSpec swapped = WithRates(spec, 0.5, 0.8);
  const auto attack_on_evidence = ReceiverStrategy::WithEvidence({0, 1, 0, 1});
  const auto a = ExpectedUtilities(spec, SenderStrategy::TruthTelling(),
                                   attack_on_evidence);
  const auto b = ExpectedUtilities(swapped, SenderStrategy::TruthTelling(),
                                   RelabelEvidence(attack_on_evidence));
  EXPECT_GT(std::abs(a.receiver - b.receiver), 0.1);
}

TEST(AnalyticProperty, PoolingVerifiesAtIntervalEndpoints) {
  std::mt19937 rng(18);
  int checked = 0;
  for (int t = 0; t < kGames; ++t) {
    const GameSpec spec{RandomPayoffs(rng), Prior(Uniform(rng)), std::nullopt};
    if (NearRegionBoundary(spec)) continue;
    const auto eqs = PoolingEquilibriaNoEvidence(spec);
    ASSERT_EQ(eqs.size(), 2u);
    EXPECT_NEAR(eqs[0].utilities.sender, eqs[1].utilities.sender, 1e-12);
    EXPECT_NEAR(eqs[0].utilities.receiver, eqs[1].utilities.receiver, 1e-12);
    for (const auto& eq : eqs) {
      const int off = eq.sender.send1(0) > 0.5 ? 0 : 1;
      ASSERT_TRUE(eq.belief_intervals[off].has_value());
      for (double end : {eq.belief_intervals[off]->lo,
                         eq.belief_intervals[off]->hi}) {
        Equilibrium probe = eq;
        probe.beliefs.after_message[off].honeypot = end;
        EXPECT_TRUE(VerifyPbe(spec, probe).pass);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, kGames);
}

TEST(AnalyticProperty, ReceiverContinuousSenderJumps) {
  std::mt19937 rng(19);
  for (int t = 0; t < kGames; ++t) {
    const PayoffTable u = RandomPayoffs(rng);
    double p_star;
    try {
      p_star = TransitionPrior(u);
    } catch (const NoTransitionError&) {
      continue;
    }
    const Prior prior(p_star);
    const auto attack = PoolingUtilities(u, prior, 1);
    const auto withdraw = PoolingUtilities(u, prior, 0);
    EXPECT_NEAR(attack.receiver, withdraw.receiver,
                1e-12 * (1.0 + std::abs(attack.receiver)));
    const double jump = p_star * (u.sender(0, 0) - u.sender(1, 0)) +
                        (1.0 - p_star) * (u.sender(0, 1) - u.sender(1, 1));
    EXPECT_NEAR(withdraw.sender - attack.sender, jump, 1e-12);
  }
  const Prior p(22.0 / 37.0);
  EXPECT_NEAR(PoolingUtilities(BenchmarkPayoffs(), p, 0).sender -
                  PoolingUtilities(BenchmarkPayoffs(), p, 1).sender,
              4.514, 1e-3);
}

TEST(NumericProperty, PureEnumerationMatchesBruteForceFilter) {
  std::mt19937 rng(20);
  for (int t = 0; t < kGames; ++t) {
    GameSpec spec = RandomEvidenceGame(rng);
    if (t % 10 == 0) spec.detector.reset();
    const auto fast = EnumeratePurePbe(spec);
    const auto slow = BruteForcePurePbe(spec);
    ASSERT_EQ(fast.size(), slow.size()) << "game " << t;
    for (size_t i = 0; i < fast.size(); ++i) {
      EXPECT_EQ(MaxAbsDiff(Flat(fast[i].sender, fast[i].receiver),
                           Flat(slow[i].sender, slow[i].receiver)),
                0.0);
    }
  }
}

TEST(NumericProperty, MixedSolutionsVerify) {
  std::mt19937 rng(21);
  for (int t = 0; t < kGames; ++t) {
    GameSpec spec = RandomEvidenceGame(rng);
    if (t % 10 == 0) spec.detector.reset();
    const auto eqs = SolveMixedPbe(spec);
    ASSERT_FALSE(eqs.empty());
    for (const auto& eq : eqs) {
      const auto v = VerifyPbe(spec, eq, 1e-9);
      EXPECT_TRUE(v.pass) << "game " << t;
      EXPECT_LE(v.worst_gain, 1e-9);
    }
  }
}

TEST(NumericProperty, MixedSolutionsIncludeEveryPureEquilibrium) {
  std::mt19937 rng(22);
  for (int t = 0; t < kGames; ++t) {
    const GameSpec spec = RandomEvidenceGame(rng);
    const auto mixed = SolveMixedPbe(spec);
    for (const auto& pure : EnumeratePurePbe(spec)) {
      bool found = false;
      for (const auto& eq : mixed) {
        found = found || StrategyDistance(eq, pure) <= 1e-9;
      }
      EXPECT_TRUE(found) << "game " << t;
    }
  }
}

TEST(NumericProperty, UninformativeDetectorReducesToPlainGame) {
  std::mt19937 rng(23);
  for (int t = 0; t < 50; ++t) {
    GameSpec spec = RandomEvidenceGame(rng);
    const double rate = Uniform(rng);
    const GameSpec weak = WithRates(spec, rate, rate);
    spec.detector.reset();
    EXPECT_TRUE(SameUtilitySets(UtilitiesOf(SolveMixedPbe(weak)),
                                UtilitiesOf(SolveMixedPbe(spec)), 1e-9))
        << "game " << t;
  }
}

TEST(NumericProperty, PerfectDetectorMatchesClosedForm) {
  std::mt19937 rng(24);
  for (int t = 0; t < 50; ++t) {
    const GameSpec spec = WithRates(RandomEvidenceGame(rng), 1.0, 0.0);
    const auto closed = OmnipotentEquilibria(spec)[0].utilities;
    for (const auto& eq : SolveMixedPbe(spec)) {
      EXPECT_NEAR(eq.utilities.sender, closed.sender, 1e-9);
      EXPECT_NEAR(eq.utilities.receiver, closed.receiver, 1e-9);
    }
  }
}

// Solutions of the mirrored game are the relabeled solutions of the
// original.
void ExpectRelabeledSolutions(const GameSpec& a, const GameSpec& b,
                              bool relabel_messages) {
  const auto sa = SolveMixedPbe(a);
  const auto sb = SolveMixedPbe(b);
  ASSERT_EQ(sa.size(), sb.size());
  for (const auto& eq : sa) {
    const auto s = relabel_messages ? RelabelMessages(eq.sender) : eq.sender;
    const auto r = relabel_messages ? RelabelMessages(eq.receiver)
                                    : RelabelEvidence(eq.receiver);
    bool found = false;
    for (const auto& other : sb) {
      if (MaxAbsDiff(Flat(s, r), Flat(other.sender, other.receiver)) <= 1e-7 &&
          std::abs(eq.utilities.sender - other.utilities.sender) <= 1e-9 &&
          std::abs(eq.utilities.receiver - other.utilities.receiver) <= 1e-9) {
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(NumericProperty, SolutionsRespectRelabelSymmetries) {
  std::mt19937 rng(25);
  for (int t = 0; t < 50; ++t) {
    const GameSpec spec = RandomEvidenceGame(rng);
    const auto rates = *spec.detector->AsSymmetric();
    ExpectRelabeledSolutions(spec, WithRates(spec, rates.delta, rates.epsilon),
                             true);
    ExpectRelabeledSolutions(
        spec, WithRates(spec, 1.0 - rates.epsilon, 1.0 - rates.delta), false);
  }
}

TEST(DetectorProperty, RatesOrderedPastEqualDensityPoint) {
  std::mt19937 rng(26);
  for (int t = 0; t < 2000; ++t) {
    const double mu0 = 200 * Uniform(rng) - 100;
    const double mu1 = mu0 + 50 * Uniform(rng);
    const double sigma = 0.1 + 20 * Uniform(rng);
    const double mid = 0.5 * (mu0 + mu1);
    const double t_d = mid + 40 * Uniform(rng);
    const auto r = RatesFromThreshold(TimingModel(mu0, sigma, mu1, sigma), {t_d});
    EXPECT_LE(0.0, r.delta);
    EXPECT_LE(r.delta, r.epsilon);
    EXPECT_LE(r.epsilon, 1.0);
  }
}

TEST(DetectorProperty, KernelNormalizedAndSweepMonotone) {
  std::mt19937 rng(27);
  for (int t = 0; t < 200; ++t) {
    const double mu0 = 100 * Uniform(rng);
    const TimingModel model(mu0, 0.5 + 10 * Uniform(rng),
                            mu0 + 30 * Uniform(rng), 0.5 + 10 * Uniform(rng));
    std::vector<double> grid;
    for (int i = 0; i < 8; ++i) grid.push_back(-20 + 160 * Uniform(rng));
    std::sort(grid.begin(), grid.end());
    const auto rows = ThresholdSweep(model, grid);
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto d = DetectorFromTiming(model, {rows[i].t_d});
      for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
          EXPECT_NEAR(d.lambda(0, m, n) + d.lambda(1, m, n), 1.0, 1e-15);
        }
      }
      if (i == 0) continue;
      EXPECT_LE(rows[i].delta, rows[i - 1].delta);
      EXPECT_LE(rows[i].epsilon, rows[i - 1].epsilon);
    }
  }
}

TEST(DetectorProperty, AgreesWithMonteCarlo) {
  const TimingModel model(100, 10, 130, 10);
  const double t_d = 115;
  const auto r = RatesFromThreshold(model, {t_d});
  std::mt19937_64 rng(28);
  std::normal_distribution<double> f0(100, 10), f1(130, 10);
  const int n = 1000000;
  int hits0 = 0, hits1 = 0;
  for (int i = 0; i < n; ++i) {
    hits0 += f0(rng) > t_d;
    hits1 += f1(rng) > t_d;
  }
  const double se0 = std::sqrt(r.delta * (1 - r.delta) / n);
  const double se1 = std::sqrt(r.epsilon * (1 - r.epsilon) / n);
  EXPECT_LE(std::abs(static_cast<double>(hits0) / n - r.delta), 3 * se0);
  EXPECT_LE(std::abs(static_cast<double>(hits1) / n - r.epsilon), 3 * se1);
}

TEST(SweepProperty, OmnipotentPointsOnLines) {
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    const PayoffTable u = RandomPayoffs(rng);
    const int a0 = BestResponseToType(u, 0), a1 = BestResponseToType(u, 1);
    const auto result =
        SweepPrior(u, DetectorModel::Symmetric(1.0, 0.0), UniformGrid(11));
    for (const auto& row : result.rows) {
      for (const auto& util : row.utilities) {
        EXPECT_NEAR(util.sender,
                    row.p0 * u.sender(a0, 0) + (1 - row.p0) * u.sender(a1, 1),
                    1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace sigev
