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

#include "sigev/numeric.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "linear.h"
#include "sigev/errors.h"

namespace sigev {
namespace {

using internal::BoxPolytopeVertices;
using internal::LinearRow;

constexpr double kDedupTol = 1e-9;
constexpr double kUtilityRelTol = 1e-9;

// Receiver's regret at belief mu when attacking with probability r.
double ReceiverGain(const PayoffTable& u, double mu, double r) {
  const double g = AttackGain(u, mu);
  return std::max(g, 0.0) - r * g;
}

double SenderGain(const GameSpec& spec, const SenderStrategy& s,
                  const ReceiverStrategy& r, int m) {
  const double u0 = SenderMessageUtility(spec, r, m, 0);
  const double u1 = SenderMessageUtility(spec, r, m, 1);
  return std::max(u0, u1) - (s.prob(0, m) * u0 + s.prob(1, m) * u1);
}

ReceiverStrategy MakeReceiver(ReceiverKind kind,
                              const std::array<double, 4>& a) {
  if (kind == ReceiverKind::kNoEvidence) {
    return ReceiverStrategy::NoEvidence({a[0], a[1]});
  }
  return ReceiverStrategy::WithEvidence(a);
}

std::string Fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

double Snap(double x, double tol) {
  if (std::abs(x) <= tol) return 0.0;
  if (std::abs(1.0 - x) <= tol) return 1.0;
  return std::clamp(x, 0.0, 1.0);
}

// Pure candidate through the two-step update; nullopt when it is not a PBE.
std::optional<Equilibrium> CheckPureProfile(const GameSpec& spec,
                                            const PureProfile& p,
                                            double tol) {
  const ReceiverKind kind = spec.receiver_kind();
  const PayoffTable& u = spec.payoffs;
  Equilibrium eq;
  eq.sender = p.sender;
  eq.receiver = p.receiver;
  eq.belief_intervals.assign(spec.num_info_sets(), std::nullopt);
  if (spec.detector) eq.beliefs.after_evidence.emplace();

  std::optional<double> mu_n[2];
  for (int n = 0; n < 2; ++n) {
    mu_n[n] = PosteriorFromMessage(spec, p.sender, n);
  }
  for (int i = 0; i < spec.num_info_sets(); ++i) {
    const int n = InfoSetMessage(kind, i), e = InfoSetEvidence(kind, i);
    std::optional<double> mu = mu_n[n];
    if (mu && spec.detector) {
      mu = PosteriorFromEvidence(*spec.detector, *mu, n, e);
    }
    const double r = p.receiver.attack(i);
    Belief& b = eq.beliefs.AtInfoSet(i);
    if (mu) {
      if (ReceiverGain(u, *mu, r) > tol) return std::nullopt;
      b = {*mu, false};
      continue;
    }
    // Payoffs are linear in the belief, so the endpoints decide.
    const double g0 = ReceiverGain(u, 0.0, r), g1 = ReceiverGain(u, 1.0, r);
    if (std::min(g0, g1) > tol) return std::nullopt;
    auto support = SupportingBeliefs(u, r);
    if (!support) {
      const double end = g0 <= g1 ? 0.0 : 1.0;
      support = Interval{end, end};
    }
    eq.belief_intervals[i] = support;
    b = {support->lo, true};
  }
  for (int m = 0; m < 2; ++m) {
    if (SenderGain(spec, p.sender, p.receiver, m) > tol) return std::nullopt;
  }
  if (spec.detector) {
    for (int n = 0; n < 2; ++n) {
      eq.beliefs.after_message[n] =
          mu_n[n] ? Belief{*mu_n[n], false}
                  : Belief{eq.beliefs.AtInfoSet(InfoSetIndex(kind, n, 0))
                               .honeypot,
                           true};
    }
  }
  eq.utilities = ExpectedUtilities(spec, p.sender, p.receiver);
  eq.classification = Classify(p.sender);
  return eq;
}

enum Pattern { kPure0 = 0, kPure1 = 1, kMix = 2 };

// Receiver best-response constraints, linear in the sender's mixing
// probabilities for the types marked kMix.
std::vector<std::vector<double>> SenderVertices(
    const GameSpec& spec, const std::array<int, 2>& s_pat,
    const std::vector<int>& r_pat, double tol) {
  const ReceiverKind kind = spec.receiver_kind();
  const double g[2] = {AttackGain(spec.payoffs, 0.0),
                       -AttackGain(spec.payoffs, 1.0)};
  int var[2] = {-1, -1};
  int dim = 0;
  for (int m = 0; m < 2; ++m) {
    if (s_pat[m] == kMix) var[m] = dim++;
  }
  std::vector<LinearRow> eq, geq;
  for (int i = 0; i < spec.num_info_sets(); ++i) {
    const int n = InfoSetMessage(kind, i), e = InfoSetEvidence(kind, i);
    // W_i = sum_m p(m) sigma(n|m) lambda(e|m,n) (+g0 | -g1); sign of W_i is
    // the sign of the attack gain at the posterior.
    LinearRow row{std::vector<double>(dim, 0.0), 0.0};
    double c = 0.0;
    for (int m = 0; m < 2; ++m) {
      const double coef = spec.prior.p(m) * spec.emission(e, m, n) *
                          (m == 0 ? g[0] : -g[1]);
      if (var[m] < 0) {
        c += coef * (n == s_pat[m] ? 1.0 : 0.0);
      } else if (n == 1) {
        row.a[var[m]] += coef;
      } else {
        row.a[var[m]] -= coef;
        c += coef;
      }
    }
    switch (r_pat[i]) {
      case kPure1:
        row.b = -c;
        geq.push_back(row);
        break;
      case kPure0:
        for (double& v : row.a) v = -v;
        row.b = c;
        geq.push_back(row);
        break;
      default:
        row.b = -c;
        eq.push_back(row);
    }
  }
  return BoxPolytopeVertices(dim, eq, geq, tol);
}

// Sender best-response constraints, linear in the receiver's mixing
// probabilities at the information sets marked kMix.
std::vector<std::vector<double>> ReceiverVertices(
    const GameSpec& spec, const std::array<int, 2>& s_pat,
    const std::vector<int>& r_pat, double tol) {
  const ReceiverKind kind = spec.receiver_kind();
  const int k = spec.num_info_sets();
  std::vector<int> var(k, -1);
  int dim = 0;
  for (int i = 0; i < k; ++i) {
    if (r_pat[i] == kMix) var[i] = dim++;
  }
  std::vector<LinearRow> eq, geq;
  for (int m = 0; m < 2; ++m) {
    // Gain from sending 1 over 0: D_m * sum_e [lambda(e|m,1) r(1,e) -
    // lambda(e|m,0) r(0,e)].
    const double d =
        spec.payoffs.sender(1, m) - spec.payoffs.sender(0, m);
    LinearRow row{std::vector<double>(dim, 0.0), 0.0};
    double c = 0.0;
    for (int i = 0; i < k; ++i) {
      const int n = InfoSetMessage(kind, i), e = InfoSetEvidence(kind, i);
      const double coef =
          d * spec.emission(e, m, n) * (n == 1 ? 1.0 : -1.0);
      if (var[i] < 0) {
        c += coef * r_pat[i];
      } else {
        row.a[var[i]] += coef;
      }
    }
    switch (s_pat[m]) {
      case kPure1:
        row.b = -c;
        geq.push_back(row);
        break;
      case kPure0:
        for (double& v : row.a) v = -v;
        row.b = c;
        geq.push_back(row);
        break;
      default:
        row.b = -c;
        eq.push_back(row);
    }
  }
  return BoxPolytopeVertices(dim, eq, geq, tol);
}

void SortUnique(std::vector<Equilibrium>& eqs) {
  std::sort(eqs.begin(), eqs.end(), StrategyLess);
  std::vector<Equilibrium> out;
  for (auto& eq : eqs) {
    if (!out.empty() && StrategyDistance(out.back(), eq) <= kDedupTol) continue;
    out.push_back(std::move(eq));
  }
  eqs = std::move(out);
}

}  // namespace

std::string ToString(DetectorRegionLabel label) {
  switch (label) {
    case DetectorRegionLabel::kWeak:
      return "Weak";
    case DetectorRegionLabel::kOmnipotent:
      return "Omnipotent";
    case DetectorRegionLabel::kConservative:
      return "Conservative";
    case DetectorRegionLabel::kAggressive:
      return "Aggressive";
    case DetectorRegionLabel::kIntermediate:
      return "Intermediate";
  }
  return "Unknown";
}

DetectorRegion ClassifyDetector(const DetectorModel& detector, double tol) {
  if (!(tol >= 0.0)) throw ValidationError("tol must be nonnegative");
  const auto rates = detector.AsSymmetric(std::max(tol, kProbabilityTol));
  if (!rates) {
    throw ValidationError(
        "detector regions are defined for the symmetric (epsilon, delta) "
        "kernel only");
  }
  DetectorRegion region{DetectorRegionLabel::kIntermediate, rates->epsilon,
                        rates->delta};
  const double eps = rates->epsilon, delta = rates->delta;
  if (std::abs(eps - delta) <= tol) {
    region.label = DetectorRegionLabel::kWeak;
  } else if (eps < delta) {
    throw ValidationError(
        "epsilon < delta: relabel the evidence (e -> 1 - e, which maps "
        "(epsilon, delta) to (1 - epsilon, 1 - delta)) before classifying");
  } else if (std::abs(eps - 1.0) <= tol && std::abs(delta) <= tol) {
    region.label = DetectorRegionLabel::kOmnipotent;
  } else if (std::abs(delta) <= tol) {
    region.label = DetectorRegionLabel::kConservative;
  } else if (std::abs(eps - 1.0) <= tol) {
    region.label = DetectorRegionLabel::kAggressive;
  }
  return region;
}

std::vector<PureProfile> AllPureProfiles(ReceiverKind kind) {
  const int k = NumInfoSets(kind);
  std::vector<PureProfile> out;
  for (int s = 0; s < 4; ++s) {
    const SenderStrategy sender(
        {static_cast<double>(s >> 1), static_cast<double>(s & 1)});
    for (int bits = 0; bits < (1 << k); ++bits) {
      std::array<double, 4> a{};
      for (int i = 0; i < k; ++i) a[i] = (bits >> (k - 1 - i)) & 1;
      out.push_back({sender, MakeReceiver(kind, a)});
    }
  }
  return out;
}

std::vector<Equilibrium> EnumeratePurePbe(const GameSpec& spec,
                                          const SolveOptions& opts) {
  std::vector<Equilibrium> out;
  for (const auto& profile : AllPureProfiles(spec.receiver_kind())) {
    if (auto eq = CheckPureProfile(spec, profile, opts.deviation_tol)) {
      out.push_back(std::move(*eq));
    }
  }
  SortUnique(out);
  return out;
}

std::vector<Equilibrium> SolveMixedPbe(const GameSpec& spec,
                                       const SolveOptions& opts) {
  const ReceiverKind kind = spec.receiver_kind();
  const int k = spec.num_info_sets();
  int r_count = 1;
  for (int i = 0; i < k; ++i) r_count *= 3;
  const double tol = opts.indifference_tol;

  std::vector<Equilibrium> found;
  std::vector<int> r_pat(k);
  for (int sp = 0; sp < 9; ++sp) {
    const std::array<int, 2> s_pat{sp / 3, sp % 3};
    for (int rp = 0; rp < r_count; ++rp) {
      for (int i = 0, code = rp; i < k; ++i, code /= 3) r_pat[i] = code % 3;
      const auto s_vertices = SenderVertices(spec, s_pat, r_pat, tol);
      if (s_vertices.empty()) continue;
      const auto r_vertices = ReceiverVertices(spec, s_pat, r_pat, tol);
      for (const auto& sv : s_vertices) {
        std::array<double, 2> s{};
        for (int m = 0, j = 0; m < 2; ++m) {
          s[m] = s_pat[m] == kMix ? Snap(sv[j++], tol) : s_pat[m];
        }
        for (const auto& rv : r_vertices) {
          std::array<double, 4> r{};
          for (int i = 0, j = 0; i < k; ++i) {
            r[i] = r_pat[i] == kMix ? Snap(rv[j++], tol) : r_pat[i];
          }
          auto eq = CompleteEquilibrium(spec, SenderStrategy(s),
                                        MakeReceiver(kind, r));
          if (!eq) continue;
          if (!VerifyPbe(spec, *eq, opts.deviation_tol).pass) continue;
          found.push_back(std::move(*eq));
        }
      }
    }
  }
  SortUnique(found);
  if (found.empty()) {
    throw SolverError("support enumeration found no equilibrium");
  }
  return found;
}

Verdict VerifyPbe(const GameSpec& spec, const Equilibrium& eq, double tol) {
  const ReceiverKind kind = spec.receiver_kind();
  if (eq.receiver.kind() != kind) {
    throw ValidationError("receiver strategy kind does not match the game");
  }
  if (static_cast<int>(eq.belief_intervals.size()) != spec.num_info_sets()) {
    throw ValidationError("belief interval count does not match the game");
  }
  if (eq.beliefs.after_evidence.has_value() != spec.detector.has_value()) {
    throw ValidationError("belief system shape does not match the game");
  }

  Verdict v;
  const PayoffTable& u = spec.payoffs;
  auto fail = [&](std::string msg) { v.failures.push_back(std::move(msg)); };

  for (int m = 0; m < 2; ++m) {
    const double gain = SenderGain(spec, eq.sender, eq.receiver, m);
    v.worst_gain = std::max(v.worst_gain, gain);
    if (gain > tol) {
      fail("sender type " + std::to_string(m) + " gains " + Fmt(gain) +
           " by deviating");
    }
  }

  for (int i = 0; i < spec.num_info_sets(); ++i) {
    const int n = InfoSetMessage(kind, i), e = InfoSetEvidence(kind, i);
    const std::string label = InfoSetLabel(kind, i);
    const Belief& b = eq.beliefs.AtInfoSet(i);
    if (!(b.honeypot >= 0.0 && b.honeypot <= 1.0)) {
      fail("belief at " + label + " outside [0, 1]");
      continue;
    }
    const double gain = ReceiverGain(u, b.honeypot, eq.receiver.attack(i));
    v.worst_gain = std::max(v.worst_gain, gain);
    if (gain > tol) {
      fail("receiver at " + label + " gains " + Fmt(gain) + " by deviating");
    }

    double w[2];
    for (int m = 0; m < 2; ++m) {
      w[m] = spec.prior.p(m) * eq.sender.prob(n, m) * spec.emission(e, m, n);
    }
    const double total = w[0] + w[1];
    if (total > 0.0) {
      if (b.off_path) fail(label + " is reached but flagged off-path");
      const double bayes = w[1] / total;
      if (std::abs(bayes - b.honeypot) > tol) {
        fail("belief at " + label + " is " + Fmt(b.honeypot) +
             ", Bayes gives " + Fmt(bayes));
      }
      continue;
    }
    if (!b.off_path) fail(label + " is off-path but not flagged");
    const auto& interval = eq.belief_intervals[i];
    if (!interval) {
      fail(label + " is off-path without a belief interval");
    } else if (!interval->Contains(b.honeypot, tol)) {
      fail("belief at " + label + " lies outside its interval");
    }
  }

  if (spec.detector) {
    for (int n = 0; n < 2; ++n) {
      const double w0 = spec.prior.p0() * eq.sender.prob(n, 0);
      const double w1 = spec.prior.p1() * eq.sender.prob(n, 1);
      const Belief& b = eq.beliefs.after_message[n];
      const std::string label = "n=" + std::to_string(n);
      if (w0 + w1 > 0.0) {
        if (b.off_path) fail(label + " is reached but flagged off-path");
        if (std::abs(w1 / (w0 + w1) - b.honeypot) > tol) {
          fail("belief after " + label + " is inconsistent with Bayes");
        }
      } else if (!b.off_path) {
        fail(label + " is off-path but not flagged");
      }
    }
  }

  const Utilities actual = ExpectedUtilities(spec, eq.sender, eq.receiver);
  auto close = [](double a, double b) {
    return std::abs(a - b) <= kUtilityRelTol * std::max(1.0, std::abs(b));
  };
  if (!close(eq.utilities.sender, actual.sender) ||
      !close(eq.utilities.receiver, actual.receiver)) {
    fail("stated utilities differ from the profile's expected utilities");
  }

  v.pass = v.failures.empty() && v.worst_gain <= tol;
  return v;
}

}  // namespace sigev
