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

#ifndef RCSIM_PRESETS_H_
#define RCSIM_PRESETS_H_

#include <string_view>
#include <vector>

#include "rcsim/control.h"
#include "rcsim/lti.h"
#include "rcsim/plant.h"
#include "rcsim/sim.h"

namespace rcsim::presets {

inline constexpr std::string_view kPlant = "pid2018-surrogate";
inline constexpr std::string_view kScenario = "pid2018-default";
inline constexpr std::string_view kPrintedFeedforward = "paper-ff";
inline constexpr std::string_view kPid = "c1-default";

// Identified nominal channels and disturbance paths of the refrigeration
// benchmark surrogate.
RationalTF G11();  // (-0.6325 s - 0.01147) / (s^2 + 16.87 s + 0.6216)
RationalTF G22();  // (3.662 s + 0.07604) / (s^2 + 19.63 s + 0.4441)
RationalTF D11();  // 44.84 / (s + 45.58)
RationalTF D21();  // (-109.1 s + 4.903) / (s^2 + 256.4 s + 7.268)
RationalTF D12();  // 0.008624 / (s + 0.04323)
RationalTF D22();  // 0.572 / (s + 0.04099)

// Looks up one of G11, G22, D11, D21, D12, D22 by name.
RationalTF ModelByName(std::string_view name);

// Static-gain multipliers over input deviations from the operating point.
GainSchedule AvSchedule();
GainSchedule NSchedule();

PlantModel Pid2018Surrogate();

// 1200 s at 1 s. Te,sec,in: -20 -> -23 at 540 s -> -20 at 960 s;
// Tc,sec,in: 30 -> 27 at 960 s; setpoints held at the operating point.
// Only the 540 s step of -3 is documented; the 960 s magnitudes and the
// index windows are assumptions.
Scenario Pid2018Default();

// Stand-in for the benchmark's default decentralised PI loops (the original
// gains are not published). Bias and output limits come from `plant`.
struct PidPair {
  PidConfig loop1;
  PidConfig loop2;
};
PidPair C1Default(const PlantModel& plant);

// The printed digital compensators carry a typo in the last one: its
// denominator reads "z^3 - -0.967 z^2 ...".
enum class PrintedReading { kSingleMinus, kDoubleMinus };

struct PrintedFilter {
  std::string_view label;        // label as printed
  std::string_view path;         // bank slot it implements
  DiscreteFilter filter;
};

// The four printed compensators (ts = 1 s). Slots are assigned by matching
// each against the Tustin discretisation of -D/G: the printed labels do not
// follow the (loop, disturbance) convention of the bank. The printed "F21"
// equals Tustin(-D22/G22) scaled by 1/10.
std::vector<PrintedFilter> PrintedFilters(PrintedReading reading = PrintedReading::kSingleMinus);

FeedforwardBank PrintedFeedforward(PrintedReading reading = PrintedReading::kSingleMinus);

// FF_ij = -D_ij / G_ii discretised from the plant's own models.
FeedforwardBank SynthesizedFeedforward(const PlantModel& plant,
                                       Discretization method = Discretization::kTustin);

// Conditional integrator parameters per loop: (delta 0.4, w 1) and (0.5, 0.5).
ConditionalIntegratorConfig CiLoop1(double ts = 1.0);
ConditionalIntegratorConfig CiLoop2(double ts = 1.0);

// C1 gains, synthesized feedforward and the conditional integrators above.
ControllerConfig DefaultController(const PlantModel& plant);

}  // namespace rcsim::presets

#endif  // RCSIM_PRESETS_H_
