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

#include "sigev/game.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sigev/errors.h"

namespace sigev {
namespace {

void CheckFinite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw ValidationError(std::string(what) + " must be finite");
  }
}

// Clamps values within kProbabilityTol of [0, 1] and rejects the rest.
double CheckProbability(double x, const std::string& what) {
  if (!std::isfinite(x) || x < -kProbabilityTol || x > 1.0 + kProbabilityTol) {
    std::ostringstream os;
    os << what << " must be a probability in [0, 1], got " << x;
    throw ValidationError(os.str());
  }
  return std::min(1.0, std::max(0.0, x));
}

}  // namespace

PayoffTable::PayoffTable(const std::array<double, 4>& sender,
                         const std::array<double, 4>& receiver)
    : sender_(sender), receiver_(receiver) {
  for (double u : sender_) CheckFinite(u, "sender utility");
  for (double u : receiver_) CheckFinite(u, "receiver utility");
}

PayoffTable HoneypotPayoffs(const HoneypotParams& p) {
  for (double x : {p.v_o, p.v_g, p.c_c, p.v_a, p.c_a, p.c_o}) {
    if (!std::isfinite(x) || x < 0.0) {
      throw ValidationError("honeypot parameters must be nonnegative");
    }
  }
  // Index y + 2m. An unattacked honeypot is worth nothing to the defender.
  return PayoffTable({p.v_g, -p.c_c, 0.0, p.v_o},
                     {0.0, p.v_a - p.c_a, 0.0, -(p.c_o + p.c_a)});
}

PayoffTable HoneypotBenchmarkPayoffs() {
  return HoneypotPayoffs(
      {.v_o = 5, .v_g = 1, .c_c = 10, .v_a = 15, .c_a = 0, .c_o = 22});
}

Prior::Prior(double p0) : p0_(CheckProbability(p0, "prior p0")) {}

DetectorModel::DetectorModel(const std::array<double, 4>& emit_given) {
  for (int i = 0; i < 4; ++i) {
    emit_[i] = CheckProbability(emit_given[i], "lambda(1|m,n)");
  }
}

DetectorModel DetectorModel::FromFullTable(const std::array<double, 8>& table) {
  std::array<double, 4> emit{};
  for (int n = 0; n < 2; ++n) {
    for (int m = 0; m < 2; ++m) {
      const double p0 = table[0 + 2 * m + 4 * n];
      const double p1 = table[1 + 2 * m + 4 * n];
      CheckProbability(p0, "lambda(0|m,n)");
      CheckProbability(p1, "lambda(1|m,n)");
      if (std::abs(p0 + p1 - 1.0) > kProbabilityTol) {
        std::ostringstream os;
        os << "lambda(.|" << m << "," << n << ") must sum to 1, got "
           << p0 + p1;
        throw ValidationError(os.str());
      }
      emit[m + 2 * n] = p1;
    }
  }
  return DetectorModel(emit);
}

DetectorModel DetectorModel::Symmetric(double epsilon, double delta) {
  epsilon = CheckProbability(epsilon, "epsilon");
  delta = CheckProbability(delta, "delta");
  // m + 2n: (0,0) truthful, (1,0) disguised honeypot, (0,1) disguised normal.
  return DetectorModel(std::array<double, 4>{delta, epsilon, epsilon, delta});
}

std::optional<DetectionRates> DetectorModel::AsSymmetric(double tol) const {
  const double eps_a = emit_[1 + 2 * 0], eps_b = emit_[0 + 2 * 1];
  const double del_a = emit_[0 + 2 * 0], del_b = emit_[1 + 2 * 1];
  if (std::abs(eps_a - eps_b) > tol || std::abs(del_a - del_b) > tol) {
    return std::nullopt;
  }
  return DetectionRates{eps_a, del_a};
}

SenderStrategy::SenderStrategy(const std::array<double, 2>& send1_given_type) {
  for (int m = 0; m < 2; ++m) {
    send1_[m] = CheckProbability(send1_given_type[m], "sigma_S(1|m)");
  }
}

SenderStrategy SenderStrategy::PoolOn(int n) {
  const double x = n == 1 ? 1.0 : 0.0;
  return SenderStrategy({x, x});
}

int NumInfoSets(ReceiverKind kind) {
  return kind == ReceiverKind::kWithEvidence ? 4 : 2;
}

int InfoSetIndex(ReceiverKind kind, int n, int e) {
  return kind == ReceiverKind::kWithEvidence ? 2 * n + e : n;
}

int InfoSetMessage(ReceiverKind kind, int info_set) {
  return kind == ReceiverKind::kWithEvidence ? info_set / 2 : info_set;
}

int InfoSetEvidence(ReceiverKind kind, int info_set) {
  return kind == ReceiverKind::kWithEvidence ? info_set % 2 : 0;
}

std::string InfoSetLabel(ReceiverKind kind, int info_set) {
  std::string label = "n=" + std::to_string(InfoSetMessage(kind, info_set));
  if (kind == ReceiverKind::kWithEvidence) {
    label += ",e=" + std::to_string(InfoSetEvidence(kind, info_set));
  }
  return label;
}

ReceiverStrategy::ReceiverStrategy(ReceiverKind kind,
                                   const std::array<double, 4>& attack)
    : kind_(kind) {
  for (int i = 0; i < NumInfoSets(kind); ++i) {
    attack_[i] = CheckProbability(attack[i], "sigma_R(1|info set)");
  }
}

ReceiverStrategy ReceiverStrategy::NoEvidence(
    const std::array<double, 2>& attack) {
  return ReceiverStrategy(ReceiverKind::kNoEvidence,
                          {attack[0], attack[1], 0.0, 0.0});
}

ReceiverStrategy ReceiverStrategy::WithEvidence(
    const std::array<double, 4>& attack) {
  return ReceiverStrategy(ReceiverKind::kWithEvidence, attack);
}

const Belief& BeliefSystem::AtInfoSet(int info_set) const {
  return after_evidence ? (*after_evidence)[info_set]
                        : after_message[info_set];
}

Belief& BeliefSystem::AtInfoSet(int info_set) {
  return after_evidence ? (*after_evidence)[info_set]
                        : after_message[info_set];
}

std::optional<double> PosteriorFromMessage(const GameSpec& spec,
                                           const SenderStrategy& sender,
                                           int n) {
  const double honeypot = sender.prob(n, 1) * spec.prior.p1();
  const double total = sender.prob(n, 0) * spec.prior.p0() + honeypot;
  if (!(total > 0.0)) return std::nullopt;
  return honeypot / total;
}

std::optional<double> PosteriorFromEvidence(const DetectorModel& detector,
                                            double mu_n, int n, int e) {
  mu_n = CheckProbability(mu_n, "mu_R(1|n)");
  const double honeypot = detector.lambda(e, 1, n) * mu_n;
  const double total = detector.lambda(e, 0, n) * (1.0 - mu_n) + honeypot;
  if (!(total > 0.0)) return std::nullopt;
  return honeypot / total;
}

double SenderMessageUtility(const GameSpec& spec,
                            const ReceiverStrategy& receiver, int m, int n) {
  double attack = 0.0;
  for (int e = 0; e < spec.num_evidence(); ++e) {
    attack += spec.emission(e, m, n) * receiver.attack(n, e);
  }
  const PayoffTable& u = spec.payoffs;
  return u.sender(0, m) + attack * (u.sender(1, m) - u.sender(0, m));
}

double SenderTypeUtility(const GameSpec& spec, const SenderStrategy& sender,
                         const ReceiverStrategy& receiver, int m) {
  return sender.prob(0, m) * SenderMessageUtility(spec, receiver, m, 0) +
         sender.prob(1, m) * SenderMessageUtility(spec, receiver, m, 1);
}

double ReceiverInfoSetUtility(const PayoffTable& payoffs,
                              const ReceiverStrategy& receiver, int m,
                              int info_set) {
  const double attack = receiver.attack(info_set);
  return attack * payoffs.receiver(1, m) +
         (1.0 - attack) * payoffs.receiver(0, m);
}

Utilities ExpectedUtilities(const GameSpec& spec, const SenderStrategy& sender,
                            const ReceiverStrategy& receiver) {
  if (receiver.kind() != spec.receiver_kind()) {
    throw ValidationError(
        "receiver strategy kind does not match the presence of a detector");
  }
  Utilities out;
  for (int m = 0; m < 2; ++m) {
    const double pm = spec.prior.p(m);
    out.sender += pm * SenderTypeUtility(spec, sender, receiver, m);
    for (int n = 0; n < 2; ++n) {
      for (int e = 0; e < spec.num_evidence(); ++e) {
        const double reach = pm * sender.prob(n, m) * spec.emission(e, m, n);
        out.receiver +=
            reach * ReceiverInfoSetUtility(
                        spec.payoffs, receiver, m,
                        InfoSetIndex(spec.receiver_kind(), n, e));
      }
    }
  }
  return out;
}

}  // namespace sigev
