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

// Game data model for two-type, two-message, two-action cheap-talk signaling
// games, optionally augmented with a deception detector that emits evidence.
//
// Every alphabet is binary:
//   type    m: 0 = normal system, 1 = honeypot
//   message n: the defender's portrayal of the system (same labels as m)
//   action  y: 0 = withdraw, 1 = attack
//   evidence e: 1 = evidence of deception, 0 = none
//
// Beliefs are always expressed as the probability that the type is a
// honeypot (m = 1).

#ifndef SIGEV_GAME_H_
#define SIGEV_GAME_H_

#include <array>
#include <optional>
#include <string>

namespace sigev {

// Absolute tolerance for sum-to-one and range checks on probabilities that
// may come from text configuration.
inline constexpr double kProbabilityTol = 1e-9;

// Utilities u^S(y, m) and u^R(y, m). Rows are ordered
// u(0,0), u(1,0), u(0,1), u(1,1), i.e. index y + 2m.
class PayoffTable {
 public:
  PayoffTable() = default;
  PayoffTable(const std::array<double, 4>& sender,
              const std::array<double, 4>& receiver);

  double sender(int y, int m) const { return sender_[y + 2 * m]; }
  double receiver(int y, int m) const { return receiver_[y + 2 * m]; }
  const std::array<double, 4>& sender_row() const { return sender_; }
  const std::array<double, 4>& receiver_row() const { return receiver_; }

 private:
  std::array<double, 4> sender_{};
  std::array<double, 4> receiver_{};
};

// Nonnegative honeypot-scenario parameters (defender = sender, attacker =
// receiver).
struct HoneypotParams {
  double v_o = 0.0;  // defender benefit of observing an attack on a honeypot
  double v_g = 0.0;  // defender benefit of a normal system left alone
  double c_c = 0.0;  // defender cost of a compromised normal system
  double v_a = 0.0;  // attacker benefit of compromising a normal system
  double c_a = 0.0;  // attacker cost of any attack
  double c_o = 0.0;  // attacker additional cost of attacking a honeypot
};

PayoffTable HoneypotPayoffs(const HoneypotParams& params);

// The defender's honeypot benchmark game: v_o=5, v_g=1, c_c=10,
// v_a-c_a=15, c_o+c_a=22.
PayoffTable HoneypotBenchmarkPayoffs();

// Probability of a normal system. p(1) is always derived as 1 - p0.
class Prior {
 public:
  Prior() = default;
  explicit Prior(double p0);

  double p0() const { return p0_; }
  double p1() const { return 1.0 - p0_; }
  double p(int m) const { return m == 0 ? p0_ : 1.0 - p0_; }

 private:
  double p0_ = 0.5;
};

// True-positive / false-positive deception detection rates.
struct DetectionRates {
  double epsilon = 0.0;  // lambda(1 | m, n), m != n
  double delta = 0.0;    // lambda(1 | m, n), m == n
};

// Evidence-emission kernel lambda(e | m, n).
class DetectorModel {
 public:
  // `emit_given` holds lambda(1 | m, n) at index m + 2n; lambda(0 | m, n) is
  // the complement.
  explicit DetectorModel(const std::array<double, 4>& emit_given);

  // Builds the kernel from a full table indexed e + 2m + 4n. Each (m, n) pair
  // must sum to one within kProbabilityTol.
  static DetectorModel FromFullTable(const std::array<double, 8>& table);
  static DetectorModel Symmetric(double epsilon, double delta);

  double lambda(int e, int m, int n) const {
    const double one = emit_[m + 2 * n];
    return e == 1 ? one : 1.0 - one;
  }

  // The (epsilon, delta) pair when the kernel has the symmetric form within
  // `tol`; nullopt otherwise.
  std::optional<DetectionRates> AsSymmetric(double tol = kProbabilityTol) const;

 private:
  std::array<double, 4> emit_{};
};

// sigma_S(1 | m) for m = 0, 1.
class SenderStrategy {
 public:
  SenderStrategy() = default;
  explicit SenderStrategy(const std::array<double, 2>& send1_given_type);

  static SenderStrategy TruthTelling() { return SenderStrategy({0.0, 1.0}); }
  static SenderStrategy Inverting() { return SenderStrategy({1.0, 0.0}); }
  static SenderStrategy PoolOn(int n);

  double send1(int m) const { return send1_[m]; }
  double prob(int n, int m) const {
    return n == 1 ? send1_[m] : 1.0 - send1_[m];
  }
  const std::array<double, 2>& send1_given_type() const { return send1_; }

 private:
  std::array<double, 2> send1_{};
};

enum class ReceiverKind { kNoEvidence, kWithEvidence };

// Receiver information sets: n (no evidence) or (n, e) with index 2n + e.
int NumInfoSets(ReceiverKind kind);
int InfoSetIndex(ReceiverKind kind, int n, int e);
int InfoSetMessage(ReceiverKind kind, int info_set);
int InfoSetEvidence(ReceiverKind kind, int info_set);  // 0 for kNoEvidence
std::string InfoSetLabel(ReceiverKind kind, int info_set);  // "n=1,e=0"

// sigma_R(1 | info set): probability of attacking.
class ReceiverStrategy {
 public:
  ReceiverStrategy() = default;

  static ReceiverStrategy NoEvidence(const std::array<double, 2>& attack);
  static ReceiverStrategy WithEvidence(const std::array<double, 4>& attack);

  ReceiverKind kind() const { return kind_; }
  int num_info_sets() const { return NumInfoSets(kind_); }
  double attack(int info_set) const { return attack_[info_set]; }
  // Attack probability after message n and evidence e; e is ignored when
  // the receiver does not observe evidence.
  double attack(int n, int e) const {
    return attack_[InfoSetIndex(kind_, n, e)];
  }
  double prob(int y, int info_set) const {
    return y == 1 ? attack_[info_set] : 1.0 - attack_[info_set];
  }

 private:
  ReceiverStrategy(ReceiverKind kind, const std::array<double, 4>& attack);

  ReceiverKind kind_ = ReceiverKind::kNoEvidence;
  std::array<double, 4> attack_{};
};

// A posterior mu_R(1 | .) together with whether Bayes' rule left it free.
struct Belief {
  double honeypot = 0.0;
  bool off_path = false;
};

struct BeliefSystem {
  std::array<Belief, 2> after_message{};
  // Indexed 2n + e; present only for games with evidence.
  std::optional<std::array<Belief, 4>> after_evidence;

  // Belief at the receiver's decision node for `info_set`.
  const Belief& AtInfoSet(int info_set) const;
  Belief& AtInfoSet(int info_set);
};

// G (no detector) or G^evidence (with detector).
struct GameSpec {
  PayoffTable payoffs;
  Prior prior;
  std::optional<DetectorModel> detector;

  ReceiverKind receiver_kind() const {
    return detector ? ReceiverKind::kWithEvidence : ReceiverKind::kNoEvidence;
  }
  int num_evidence() const { return detector ? 2 : 1; }
  int num_info_sets() const { return NumInfoSets(receiver_kind()); }
  // lambda(e | m, n); the no-evidence game emits e = 0 with certainty.
  double emission(int e, int m, int n) const {
    if (detector) return detector->lambda(e, m, n);
    return e == 0 ? 1.0 : 0.0;
  }
};

// mu_R(1 | n) by Bayes' rule; nullopt when message n has zero probability.
std::optional<double> PosteriorFromMessage(const GameSpec& spec,
                                           const SenderStrategy& sender,
                                           int n);

// Second-step update mu_R(1 | n, e) from mu_n = mu_R(1 | n); nullopt when the
// denominator sum_m lambda(e | m, n) mu_R(m | n) vanishes.
std::optional<double> PosteriorFromEvidence(const DetectorModel& detector,
                                            double mu_n, int n, int e);

struct Utilities {
  double sender = 0.0;
  double receiver = 0.0;
};

// U^S and U^R. Throws ValidationError when the receiver kind does not match
// the presence of a detector.
Utilities ExpectedUtilities(const GameSpec& spec, const SenderStrategy& sender,
                            const ReceiverStrategy& receiver);

// Sender's expected utility from sending n when the type is m.
double SenderMessageUtility(const GameSpec& spec,
                            const ReceiverStrategy& receiver, int m, int n);

// U~^S(sigma_S, sigma_R, m).
double SenderTypeUtility(const GameSpec& spec, const SenderStrategy& sender,
                         const ReceiverStrategy& receiver, int m);

// U^^R(sigma_R, m, n, e) for the receiver information set `info_set`.
double ReceiverInfoSetUtility(const PayoffTable& payoffs,
                              const ReceiverStrategy& receiver, int m,
                              int info_set);

}  // namespace sigev

#endif  // SIGEV_GAME_H_
