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

#include "sigev/sweep.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sigev/analytic.h"
#include "sigev/errors.h"
#include "sigev/json_io.h"

namespace sigev {
namespace {

constexpr double kSamePairTol = 1e-9;
constexpr double kEvidenceTol = 1e-9;

std::vector<Equilibrium> SolveWithoutDetector(const GameSpec& spec, int side,
                                              const SolveOptions& opts) {
  std::vector<Equilibrium> eqs;
  if (side != 0) {
    eqs = PoolingEquilibriaWithAction(spec, side > 0 ? 1 : 0);
  } else {
    try {
      eqs = PoolingEquilibriaNoEvidence(spec);
    } catch (const UnsupportedRegionError&) {
      return SolveMixedPbe(spec, opts);
    }
  }
  for (auto& eq : SeparatingEquilibriaNoEvidence(spec)) {
    eqs.push_back(std::move(eq));
  }
  return eqs;
}

SweepRow SolvePoint(const PayoffTable& payoffs,
                    const std::optional<DetectorModel>& detector, double p0,
                    int side, const SolveOptions& opts) {
  const GameSpec spec{payoffs, Prior(p0), detector};
  SweepRow row;
  row.p0 = p0;
  row.side = side;
  if (side < 0) {
    row.region = ToString(PayoffRegionLabel::kDefendFavorable);
  } else if (side > 0) {
    row.region = ToString(PayoffRegionLabel::kAttackFavorable);
  } else {
    row.region = ToString(ClassifyPayoffRegion(spec).label);
  }

  std::vector<Equilibrium> eqs;
  try {
    if (!detector) {
      row.detector_region = "None";
      eqs = SolveWithoutDetector(spec, side, opts);
    } else {
      std::optional<DetectorRegion> dr;
      try {
        dr = ClassifyDetector(*detector);
      } catch (const ValidationError&) {
        // Asymmetric or inverted kernels are still solvable.
      }
      row.detector_region = dr ? ToString(dr->label) : "Unclassified";
      if (dr && dr->label == DetectorRegionLabel::kOmnipotent) {
        eqs = OmnipotentEquilibria(spec);
      } else {
        eqs = SolveMixedPbe(spec, opts);
      }
    }
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " at p0=" + FormatNumber(p0));
  }

  row.n_equilibria = static_cast<int>(eqs.size());
  std::vector<Utilities> pairs;
  for (const auto& eq : eqs) pairs.push_back(eq.utilities);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.sender != b.sender ? a.sender < b.sender : a.receiver < b.receiver;
  });
  for (const auto& p : pairs) {
    bool dup = false;
    for (const auto& q : row.utilities) {
      dup = dup || (std::abs(p.sender - q.sender) <= kSamePairTol &&
                    std::abs(p.receiver - q.receiver) <= kSamePairTol);
    }
    if (!dup) row.utilities.push_back(p);
  }
  for (const auto& a : row.utilities) {
    for (const auto& b : row.utilities) {
      row.ambiguous = row.ambiguous ||
                      std::abs(a.sender - b.sender) > kAmbiguitySpread ||
                      std::abs(a.receiver - b.receiver) > kAmbiguitySpread;
    }
  }

  if (detector) {
    for (const auto& eq : eqs) {
      for (int n = 0; n < 2; ++n) {
        const double reach = spec.prior.p0() * eq.sender.prob(n, 0) +
                             spec.prior.p1() * eq.sender.prob(n, 1);
        if (reach > 0.0 && std::abs(eq.receiver.attack(n, 0) -
                                    eq.receiver.attack(n, 1)) > kEvidenceTol) {
          row.evidence_dependent = true;
        }
      }
    }
  }
  return row;
}

void CheckGrid(const std::vector<double>& grid) {
  if (grid.empty()) throw ValidationError("prior grid is empty");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
      throw ValidationError("prior grid values must lie in [0, 1]");
    }
    if (i > 0 && grid[i] < grid[i - 1]) {
      throw ValidationError("prior grid must be sorted ascending");
    }
  }
}

}  // namespace

SweepResult SweepPrior(const PayoffTable& payoffs,
                       const std::optional<DetectorModel>& detector,
                       const std::vector<double>& grid,
                       const SweepOptions& opts) {
  CheckGrid(grid);
  SweepResult result;
  result.has_detector = detector.has_value();
  try {
    result.p0_star = TransitionPrior(payoffs);
  } catch (const NoTransitionError&) {
  }
  for (double p0 : grid) {
    if (!detector && opts.straddle && result.p0_star &&
        std::abs(p0 - *result.p0_star) <= opts.straddle_radius) {
      result.rows.push_back(
          SolvePoint(payoffs, detector, *result.p0_star, -1, opts.solve));
      result.rows.push_back(
          SolvePoint(payoffs, detector, *result.p0_star, +1, opts.solve));
      continue;
    }
    result.rows.push_back(SolvePoint(payoffs, detector, p0, 0, opts.solve));
  }
  return result;
}

std::vector<double> UniformGrid(int n) {
  if (n < 2) throw ValidationError("grid needs at least 2 points");
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / (n - 1);
  return grid;
}

double TransitionPrior(const PayoffTable& payoffs) {
  const CBConstants cb = ComputeCBConstants(payoffs);
  const double sum = cb.cb0 + cb.cb1;
  if (!(sum > 0.0)) {
    throw NoTransitionError("no transition prior: CB0 + CB1 <= 0");
  }
  const double p = cb.cb1 / sum;
  if (p < 0.0 || p > 1.0) {
    throw NoTransitionError("the payoff region does not change on [0, 1]");
  }
  return p;
}

HoneypotFraction OptimalHoneypotFraction(const PayoffTable& payoffs,
                                         double margin) {
  const double p_star = TransitionPrior(payoffs);
  if (p_star <= 0.0) {
    throw NoTransitionError("no defend-favorable region");
  }
  if (!(margin > 0.0 && margin < p_star)) {
    throw ValidationError("margin must lie in (0, p0*)");
  }
  const double slope = payoffs.sender(0, 0) - payoffs.sender(0, 1);
  const double p0 = slope >= 0.0 ? p_star - margin : 0.0;
  return {p0, p0 * slope + payoffs.sender(0, 1)};
}

std::vector<Utilities> SelectContinuous(const SweepResult& result) {
  std::vector<Utilities> out;
  for (const auto& row : result.rows) {
    if (row.utilities.empty()) {
      throw SolverError("sweep row without equilibria");
    }
    const Utilities* best = &row.utilities.front();
    if (out.empty()) {
      for (const auto& u : row.utilities) {
        if (u.sender > best->sender) best = &u;
      }
    } else {
      const Utilities& prev = out.back();
      double best_d = std::numeric_limits<double>::infinity();
      for (const auto& u : row.utilities) {
        const double d = std::max(std::abs(u.sender - prev.sender),
                                  std::abs(u.receiver - prev.receiver));
        if (d < best_d) {
          best_d = d;
          best = &u;
        }
      }
    }
    out.push_back(*best);
  }
  return out;
}

std::vector<BenefitRow> DetectorBenefit(const PayoffTable& payoffs,
                                        const DetectorModel& detector,
                                        const std::vector<double>& grid,
                                        const SolveOptions& solve) {
  SweepOptions opts;
  opts.straddle = false;
  opts.solve = solve;
  const SweepResult with = SweepPrior(payoffs, detector, grid, opts);
  const SweepResult without = SweepPrior(payoffs, std::nullopt, grid, opts);
  const auto sel_with = SelectContinuous(with);
  const auto sel_without = SelectContinuous(without);
  std::vector<BenefitRow> rows;
  for (size_t i = 0; i < grid.size(); ++i) {
    BenefitRow r;
    r.p0 = grid[i];
    r.us_with = sel_with[i].sender;
    r.us_without = sel_without[i].sender;
    r.benefit = r.us_with - r.us_without;
    r.ur_with = sel_with[i].receiver;
    r.ur_without = sel_without[i].receiver;
    r.ambiguous = with.rows[i].ambiguous || without.rows[i].ambiguous;
    rows.push_back(r);
  }
  return rows;
}

void WriteSweepCsv(std::ostream& os, const SweepResult& result) {
  os << "p0,region,detector_region,U_S,U_R,n_equilibria,ambiguous\n";
  for (const auto& row : result.rows) {
    for (const auto& u : row.utilities) {
      os << FormatNumber(row.p0) << ',' << row.region << ','
         << row.detector_region << ',' << FormatNumber(u.sender) << ','
         << FormatNumber(u.receiver) << ',' << row.n_equilibria << ','
         << (row.ambiguous ? "true" : "false") << '\n';
    }
  }
}

void WriteBenefitCsv(std::ostream& os, const std::vector<BenefitRow>& rows) {
  os << "p0,U_S_with,U_S_without,benefit,U_R_with,U_R_without,ambiguous\n";
  for (const auto& r : rows) {
    os << FormatNumber(r.p0) << ',' << FormatNumber(r.us_with) << ','
       << FormatNumber(r.us_without) << ',' << FormatNumber(r.benefit) << ','
       << FormatNumber(r.ur_with) << ',' << FormatNumber(r.ur_without) << ','
       << (r.ambiguous ? "true" : "false") << '\n';
  }
}

}  // namespace sigev
