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

#ifndef RCSIM_FFSYNTH_H_
#define RCSIM_FFSYNTH_H_

#include <optional>
#include <string>
#include <vector>

#include "rcsim/lti.h"

namespace rcsim {

// Roots of numerator and denominator closer than this (relative to the
// largest root magnitude, floored at 1) are cancelled.
inline constexpr double kCancellationTolerance = 1e-7;

struct SynthesisResult {
  RationalTF continuous;
  std::optional<DiscreteFilter> discrete;  // present iff stable && proper
  bool stable = false;
  bool proper = false;
  std::vector<std::string> notes;
};

// -d/g with common-factor cancellation. Throws InfeasibleError when the
// result is improper (the compensator would need future disturbance
// samples) and std::invalid_argument when g is identically zero.
RationalTF RationalDivideNegate(const RationalTF& d, const RationalTF& g,
                                double tolerance = kCancellationTolerance);

// Feedforward compensator FF = -D/G, discretised when realisable. Infeasible
// pairs produce a result without `discrete` and with diagnostics in `notes`.
SynthesisResult SynthesizeFeedforward(const RationalTF& d, const RationalTF& g, double ts,
                                      Discretization method);

// Coefficient-level comparison between a synthesised filter and a reference
// (e.g. printed) filter of the same order.
struct FilterComparison {
  double max_abs_coeff_delta;  // NaN when the orders differ
  double dc_synthesized;
  double dc_reference;
  double dc_ratio;  // synthesized / reference
};

FilterComparison CompareFilters(const DiscreteFilter& synthesized,
                                const DiscreteFilter& reference);

}  // namespace rcsim

#endif  // RCSIM_FFSYNTH_H_
