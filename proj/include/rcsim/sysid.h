/*
 * Copyright 2026 The rcsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RCSIM_SYSID_H_
#define RCSIM_SYSID_H_

#include <string>
#include <vector>

#include "rcsim/lti.h"

namespace rcsim {

// Uniformly sampled response (deviation form, first sample at the step
// instant) to a step of `amplitude` applied at t = 0.
struct StepExperiment {
  double ts = 1.0;
  double amplitude = 1.0;
  std::vector<double> response;

  // Throws ConfigError for ts <= 0, amplitude == 0, fewer than 8 samples or a
  // response that does not start at zero.
  void Validate() const;
};

struct FitResult {
  RationalTF model;
  double sse;            // on the amplitude-normalised response
  double max_deviation;  // max |fit - data| relative to |final value|
  bool converged;
  std::vector<std::string> warnings;
};

// (b1 s + b0) / (s^2 + a1 s + a0) with a1, a0 > 0.
FitResult FitSecondOrder(const StepExperiment& exp);

// b0 / (s + a0) with a0 > 0.
FitResult FitFirstOrder(const StepExperiment& exp);

}  // namespace rcsim

#endif  // RCSIM_SYSID_H_
