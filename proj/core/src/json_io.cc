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

#include "sigev/json_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sigev/errors.h"

namespace sigev {
namespace {

std::string TypeKey(int m) { return "m=" + std::to_string(m); }

double GetNumber(const Json& j, const std::string& key,
                 const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(where + ": missing key \"" + key + "\"");
  }
  const Json& v = j.at(key);
  if (!v.is_number()) {
    throw ValidationError(where + "." + key + " must be a number");
  }
  return v.get<double>();
}

std::array<double, 4> GetRow(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 4) {
    throw ValidationError("payoffs." + key + " must be an array of 4 numbers");
  }
  std::array<double, 4> row{};
  for (int i = 0; i < 4; ++i) {
    if (!j.at(key)[i].is_number()) {
      throw ValidationError("payoffs." + key + " must hold numbers");
    }
    row[i] = j.at(key)[i].get<double>();
  }
  return row;
}

DetectorModel DetectorFromJson(const Json& j) {
  if (!j.is_object()) throw ValidationError("detector must be an object");
  if (j.contains("lambda")) {
    const Json& lam = j.at("lambda");
    if (!lam.is_object()) throw ValidationError("detector.lambda must be an object");
    std::array<double, 8> table{};
    for (int n = 0; n < 2; ++n) {
      for (int m = 0; m < 2; ++m) {
        const std::string cond = std::to_string(m) + "," + std::to_string(n);
        const std::string k0 = "0|" + cond, k1 = "1|" + cond;
        const bool h0 = lam.contains(k0), h1 = lam.contains(k1);
        if (!h0 && !h1) {
          throw ValidationError("detector.lambda lacks entries for m,n=" +
                                cond);
        }
        const double v1 = h1 ? GetNumber(lam, k1, "detector.lambda")
                             : 1.0 - GetNumber(lam, k0, "detector.lambda");
        const double v0 = h0 ? GetNumber(lam, k0, "detector.lambda") : 1.0 - v1;
        table[0 + 2 * m + 4 * n] = v0;
        table[1 + 2 * m + 4 * n] = v1;
      }
    }
    return DetectorModel::FromFullTable(table);
  }
  return DetectorModel::Symmetric(GetNumber(j, "epsilon", "detector"),
                                  GetNumber(j, "delta", "detector"));
}

Json BeliefJson(const Belief& b) {
  return {{"honeypot", Round12(b.honeypot)}, {"off_path", b.off_path}};
}

Belief BeliefFromJson(const Json& j, const std::string& where) {
  Belief b;
  b.honeypot = GetNumber(j, "honeypot", where);
  if (j.contains("off_path")) {
    if (!j.at("off_path").is_boolean()) {
      throw ValidationError(where + ".off_path must be a boolean");
    }
    b.off_path = j.at("off_path").get<bool>();
  }
  return b;
}

}  // namespace

std::string FormatNumber(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

double Round12(double x) {
  if (!std::isfinite(x)) return x;
  const double r = std::strtod(FormatNumber(x).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;
}

GameSpec GameSpecFromJson(const Json& j) {
  if (!j.is_object()) throw ValidationError("game spec must be an object");
  if (!j.contains("payoffs") || !j.at("payoffs").is_object()) {
    throw ValidationError("game spec: missing object \"payoffs\"");
  }
  if (!j.contains("prior")) {
    throw ValidationError("game spec: missing object \"prior\"");
  }
  GameSpec spec;
  spec.payoffs = PayoffTable(GetRow(j.at("payoffs"), "sender"),
                             GetRow(j.at("payoffs"), "receiver"));
  spec.prior = Prior(GetNumber(j.at("prior"), "p0", "prior"));
  if (j.contains("detector") && !j.at("detector").is_null()) {
    spec.detector = DetectorFromJson(j.at("detector"));
  }
  return spec;
}

Json ToJson(const GameSpec& spec) {
  Json j;
  j["payoffs"]["sender"] = spec.payoffs.sender_row();
  j["payoffs"]["receiver"] = spec.payoffs.receiver_row();
  j["prior"]["p0"] = spec.prior.p0();
  if (spec.detector) {
    if (auto rates = spec.detector->AsSymmetric()) {
      j["detector"] = {{"epsilon", rates->epsilon}, {"delta", rates->delta}};
    } else {
      Json lam;
      for (int e = 0; e < 2; ++e) {
        for (int m = 0; m < 2; ++m) {
          for (int n = 0; n < 2; ++n) {
            lam[std::to_string(e) + "|" + std::to_string(m) + "," +
                std::to_string(n)] = spec.detector->lambda(e, m, n);
          }
        }
      }
      j["detector"]["lambda"] = lam;
    }
  }
  return j;
}

SolveOptions SolveOptionsFromJson(const Json& j) {
  if (!j.is_object()) throw ValidationError("solve options must be an object");
  SolveOptions opts;
  if (j.contains("deviation_tol")) {
    opts.deviation_tol = GetNumber(j, "deviation_tol", "solve options");
  }
  if (j.contains("indifference_tol")) {
    opts.indifference_tol = GetNumber(j, "indifference_tol", "solve options");
  }
  if (!(opts.deviation_tol >= 0.0) || !(opts.indifference_tol >= 0.0)) {
    throw ValidationError("solve tolerances must be nonnegative");
  }
  return opts;
}

TimingSpec TimingSpecFromJson(const Json& j) {
  if (!j.is_object()) throw ValidationError("timing spec must be an object");
  TimingSpec spec{TimingModel(GetNumber(j, "mu0", "timing"),
                           GetNumber(j, "sigma0", "timing"),
                           GetNumber(j, "mu1", "timing"),
                           GetNumber(j, "sigma1", "timing")),
               std::nullopt};
  if (j.contains("t_d")) {
    const double t = GetNumber(j, "t_d", "timing");
    if (!std::isfinite(t)) throw ValidationError("timing.t_d must be finite");
    spec.threshold = Threshold{t};
  }
  return spec;
}

Json ToJson(const Equilibrium& eq, const GameSpec& spec) {
  const ReceiverKind kind = spec.receiver_kind();
  Json j;
  j["classification"] = ToString(eq.classification);
  j["any_sender_strategy"] = eq.any_sender_strategy;
  for (int m = 0; m < 2; ++m) {
    j["sender"][TypeKey(m)] = Round12(eq.sender.send1(m));
  }
  Json beliefs = Json::object();
  Json intervals = Json::object();
  if (spec.detector) {
    for (int n = 0; n < 2; ++n) {
      beliefs["n=" + std::to_string(n)] = BeliefJson(eq.beliefs.after_message[n]);
    }
  }
  for (int i = 0; i < spec.num_info_sets(); ++i) {
    const std::string label = InfoSetLabel(kind, i);
    j["receiver"][label] = Round12(eq.receiver.attack(i));
    beliefs[label] = BeliefJson(eq.beliefs.AtInfoSet(i));
    if (const auto& iv = eq.belief_intervals[i]) {
      intervals[label] = {Round12(iv->lo), Round12(iv->hi)};
    }
  }
  j["beliefs"] = beliefs;
  j["belief_intervals"] = intervals;
  j["utilities"] = {{"sender", Round12(eq.utilities.sender)},
                    {"receiver", Round12(eq.utilities.receiver)}};
  return j;
}

Equilibrium EquilibriumFromJson(const Json& j, const GameSpec& spec) {
  if (!j.is_object()) throw ValidationError("equilibrium must be an object");
  const ReceiverKind kind = spec.receiver_kind();
  if (!j.contains("sender") || !j.contains("receiver")) {
    throw ValidationError("equilibrium needs \"sender\" and \"receiver\"");
  }
  std::array<double, 2> s{};
  for (int m = 0; m < 2; ++m) {
    s[m] = GetNumber(j.at("sender"), TypeKey(m), "sender");
  }
  const Json& rj = j.at("receiver");
  if (!rj.is_object() ||
      static_cast<int>(rj.size()) != spec.num_info_sets()) {
    throw ValidationError(
        "receiver strategy must list exactly the game's information sets");
  }
  std::array<double, 4> r{};
  for (int i = 0; i < spec.num_info_sets(); ++i) {
    r[i] = GetNumber(rj, InfoSetLabel(kind, i), "receiver");
  }

  Equilibrium eq;
  eq.sender = SenderStrategy(s);
  eq.receiver = kind == ReceiverKind::kNoEvidence
                    ? ReceiverStrategy::NoEvidence({r[0], r[1]})
                    : ReceiverStrategy::WithEvidence(r);
  eq.belief_intervals.assign(spec.num_info_sets(), std::nullopt);
  if (spec.detector) eq.beliefs.after_evidence.emplace();

  if (j.contains("beliefs")) {
    const Json& bj = j.at("beliefs");
    if (spec.detector) {
      for (int n = 0; n < 2; ++n) {
        const std::string key = "n=" + std::to_string(n);
        if (bj.contains(key)) {
          eq.beliefs.after_message[n] = BeliefFromJson(bj.at(key), key);
        }
      }
    }
    for (int i = 0; i < spec.num_info_sets(); ++i) {
      const std::string label = InfoSetLabel(kind, i);
      if (!bj.is_object() || !bj.contains(label)) {
        throw ValidationError("beliefs: missing \"" + label + "\"");
      }
      eq.beliefs.AtInfoSet(i) = BeliefFromJson(bj.at(label), label);
    }
    if (j.contains("belief_intervals")) {
      const Json& ij = j.at("belief_intervals");
      for (int i = 0; i < spec.num_info_sets(); ++i) {
        const std::string label = InfoSetLabel(kind, i);
        if (!ij.is_object() || !ij.contains(label)) continue;
        const Json& pair = ij.at(label);
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number()) {
          throw ValidationError("belief_intervals." + label +
                                " must be [lo, hi]");
        }
        eq.belief_intervals[i] =
            Interval{pair[0].get<double>(), pair[1].get<double>()};
      }
    }
  } else if (auto done = CompleteEquilibrium(spec, eq.sender, eq.receiver)) {
    eq.beliefs = done->beliefs;
    eq.belief_intervals = done->belief_intervals;
  } else {
    // Unsupportable off-path action: fill Bayes where defined and leave the
    // rest flagged without an interval so that verification reports it.
    for (int i = 0; i < spec.num_info_sets(); ++i) {
      const int n = InfoSetMessage(kind, i), e = InfoSetEvidence(kind, i);
      double w[2];
      for (int m = 0; m < 2; ++m) {
        w[m] = spec.prior.p(m) * eq.sender.prob(n, m) * spec.emission(e, m, n);
      }
      eq.beliefs.AtInfoSet(i) = w[0] + w[1] > 0.0
                                    ? Belief{w[1] / (w[0] + w[1]), false}
                                    : Belief{0.0, true};
    }
    if (spec.detector) {
      for (int n = 0; n < 2; ++n) {
        auto mu = PosteriorFromMessage(spec, eq.sender, n);
        eq.beliefs.after_message[n] = mu ? Belief{*mu, false} : Belief{0.0, true};
      }
    }
  }

  if (j.contains("utilities")) {
    eq.utilities.sender = GetNumber(j.at("utilities"), "sender", "utilities");
    eq.utilities.receiver =
        GetNumber(j.at("utilities"), "receiver", "utilities");
  } else {
    eq.utilities = ExpectedUtilities(spec, eq.sender, eq.receiver);
  }
  if (j.contains("any_sender_strategy") &&
      j.at("any_sender_strategy").is_boolean()) {
    eq.any_sender_strategy = j.at("any_sender_strategy").get<bool>();
  }
  eq.classification = Classify(eq.sender);
  return eq;
}

Json ToJson(const Verdict& v) {
  return {{"pass", v.pass},
          {"worst_gain", Round12(v.worst_gain)},
          {"failures", v.failures}};
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace sigev
