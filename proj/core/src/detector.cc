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

#include "sigev/detector.h"

#include <cmath>

#include "sigev/errors.h"

namespace sigev {

TimingModel::TimingModel(double mu0, double sigma0, double mu1, double sigma1)
    : mu0_(mu0), sigma0_(sigma0), mu1_(mu1), sigma1_(sigma1) {
  if (!std::isfinite(mu0) || !std::isfinite(mu1)) {
    throw ValidationError("timing means must be finite");
  }
  if (!(sigma0 > 0.0) || !(sigma1 > 0.0) || !std::isfinite(sigma0) ||
      !std::isfinite(sigma1)) {
    throw ValidationError("timing standard deviations must be positive");
  }
  if (mu1 < mu0) {
    throw ValidationError("virtual machines must not run faster: mu1 >= mu0");
  }
}

double GaussianSurvival(double t, double mu, double sigma) {
  return 0.5 * std::erfc((t - mu) / (sigma * std::sqrt(2.0)));
}

DetectorRates RatesFromThreshold(const TimingModel& model, Threshold th) {
  if (std::isnan(th.t_d)) throw ValidationError("threshold must not be NaN");
  return {GaussianSurvival(th.t_d, model.mu0(), model.sigma0()),
          GaussianSurvival(th.t_d, model.mu1(), model.sigma1())};
}

DetectorModel DetectorFromTiming(const TimingModel& model, Threshold th) {
  const DetectorRates rates = RatesFromThreshold(model, th);
  return DetectorModel::Symmetric(rates.epsilon, rates.delta);
}

std::vector<ThresholdRow> ThresholdSweep(const TimingModel& model,
                                         const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw ValidationError("threshold grid is empty");
  std::vector<ThresholdRow> rows;
  rows.reserve(t_grid.size());
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (i > 0 && !(t_grid[i] >= t_grid[i - 1])) {
      throw ValidationError("threshold grid must be sorted ascending");
    }
    const DetectorRates r = RatesFromThreshold(model, {t_grid[i]});
    rows.push_back({t_grid[i], r.delta, r.epsilon});
  }
  return rows;
}

}  // namespace sigev
