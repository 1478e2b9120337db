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

// Timing-based honeypot detection: Gaussian run-time models for normal
// systems and virtual machines, a decision threshold and the induced
// detection rates.

#ifndef SIGEV_DETECTOR_H_
#define SIGEV_DETECTOR_H_

#include <vector>

#include "sigev/game.h"

namespace sigev {

// f_0 ~ N(mu0, sigma0^2) for normal systems, f_1 ~ N(mu1, sigma1^2) for
// virtual machines. Validated on construction: sigmas positive and finite,
// mu1 >= mu0.
class TimingModel {
 public:
  TimingModel(double mu0, double sigma0, double mu1, double sigma1);

  double mu0() const { return mu0_; }
  double sigma0() const { return sigma0_; }
  double mu1() const { return mu1_; }
  double sigma1() const { return sigma1_; }

 private:
  double mu0_, sigma0_, mu1_, sigma1_;
};

struct Threshold {
  double t_d = 0.0;
};

// P(X > t) for X ~ N(mu, sigma^2), via erfc for accuracy in the upper tail.
double GaussianSurvival(double t, double mu, double sigma);

struct DetectorRates {
  double delta = 0.0;    // false positives: normal systems flagged
  double epsilon = 0.0;  // true positives: virtual machines flagged
};

DetectorRates RatesFromThreshold(const TimingModel& model, Threshold th);

DetectorModel DetectorFromTiming(const TimingModel& model, Threshold th);

struct ThresholdRow {
  double t_d = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
};

// Throws ValidationError for an empty or unsorted grid.
std::vector<ThresholdRow> ThresholdSweep(const TimingModel& model,
                                         const std::vector<double>& t_grid);

}  // namespace sigev

#endif  // SIGEV_DETECTOR_H_
