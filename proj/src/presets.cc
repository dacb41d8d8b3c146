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

#include "rcsim/presets.h"

#include <string>

#include "rcsim/errors.h"
#include "rcsim/ffsynth.h"

namespace rcsim::presets {

RationalTF G11() { return RationalTF({-0.6325, -0.01147}, {1.0, 16.87, 0.6216}); }
RationalTF G22() { return RationalTF({3.662, 0.07604}, {1.0, 19.63, 0.4441}); }
RationalTF D11() { return RationalTF({44.84}, {1.0, 45.58}); }
RationalTF D21() { return RationalTF({-109.1, 4.903}, {1.0, 256.4, 7.268}); }
RationalTF D12() { return RationalTF({0.008624}, {1.0, 0.04323}); }
RationalTF D22() { return RationalTF({0.572}, {1.0, 0.04099}); }

RationalTF ModelByName(std::string_view name) {
  if (name == "G11") return G11();
  if (name == "G22") return G22();
  if (name == "D11") return D11();
  if (name == "D21") return D21();
  if (name == "D12") return D12();
  if (name == "D22") return D22();
  throw ConfigError("unknown model '" + std::string(name) +
                    "' (expected G11, G22, D11, D21, D12 or D22)");
}

GainSchedule AvSchedule() {
  return GainSchedule({-38.79, -30.0, -20.0, -10.0, 10.0, 20.0, 30.0, 40.0, 51.21},
                      {2.0981, 1.6986, 1.3550, 1.2282, 1.0000, 0.9106, 0.8336, 0.7664, 0.6997});
}

GainSchedule NSchedule() {
  return GainSchedule({-6.45, -5.0, 5.0, 13.55}, {1.2895, 1.2423, 1.0000, 0.8569});
}

PlantModel Pid2018Surrogate() {
  return PlantModel{G11(), G22(), D11(), D21(), D12(), D22(),
                    AvSchedule(), NSchedule(), OperatingPoint{}, ActuatorLimits{}, 1.0};
}

Scenario Pid2018Default() {
  const OperatingPoint op;
  Scenario s;
  s.ts = 1.0;
  s.horizon = 1200.0;
  s.ref1 = {{0.0, op.te_sec_out0}};
  s.ref2 = {{0.0, op.tsh0}};
  s.dist1 = {{0.0, op.te_sec_in0}, {540.0, op.te_sec_in0 - 3.0}, {960.0, op.te_sec_in0}};
  s.dist2 = {{0.0, op.tc_sec_in0}, {960.0, op.tc_sec_in0 - 3.0}};
  s.windows = {IndexWindow{1, 540.0, 120.0}, IndexWindow{2, 540.0, 420.0},
               IndexWindow{2, 540.0, 120.0}, IndexWindow{2, 960.0, 120.0}};
  return s;
}

PidPair C1Default(const PlantModel& plant) {
  PidPair p;
  // Av -> Te,sec,out has negative static gain.
  p.loop1.kp = 10.0;
  p.loop1.ti = 3.0;
  p.loop1.error_sign = -1.0;
  p.loop1.bias = plant.op.av0;
  p.loop1.out_min = plant.limits.av_min;
  p.loop1.out_max = plant.limits.av_max;
  p.loop1.ts = plant.ts;

  p.loop2.kp = 2.0;
  p.loop2.ti = 15.0;
  p.loop2.bias = plant.op.n0;
  p.loop2.out_min = plant.limits.n_min;
  p.loop2.out_max = plant.limits.n_max;
  p.loop2.ts = plant.ts;
  return p;
}

std::vector<PrintedFilter> PrintedFilters(PrintedReading reading) {
  const double z2 = reading == PrintedReading::kSingleMinus ? -0.967 : 0.967;
  return {
      {"F11", "f12", DiscreteFilter({0.1268, -0.02234, -0.09628}, {1.0, -1.94, 0.9405}, 1.0)},
      {"F21", "f22", DiscreteFilter({-0.1655, 0.02693, 0.1319}, {1.0, -1.939, 0.9401}, 1.0)},
      {"F12", "f11", DiscreteFilter({28.32, -4.989, -21.5}, {1.0, -0.0661, -0.8995}, 1.0)},
      {"F22", "f21",
       DiscreteFilter({2.404, -2.905, -1.506, 2.003}, {1.0, z2, -0.9692, 0.9373}, 1.0)},
  };
}

FeedforwardBank PrintedFeedforward(PrintedReading reading) {
  const auto printed = PrintedFilters(reading);
  return FeedforwardBank{printed[2].filter, printed[3].filter, printed[0].filter,
                         printed[1].filter};
}

FeedforwardBank SynthesizedFeedforward(const PlantModel& plant, Discretization method) {
  auto make = [&](const RationalTF& d, const RationalTF& g, const char* name) {
    SynthesisResult r = SynthesizeFeedforward(d, g, plant.ts, method);
    if (!r.discrete)
      throw InfeasibleError(std::string("feedforward ") + name + " is not realisable: " +
                                (r.notes.empty() ? "" : r.notes.back()),
                            r.proper ? 0 : r.continuous.num_degree() - r.continuous.den_degree());
    return *r.discrete;
  };
  return FeedforwardBank{make(plant.d11, plant.g11, "f11"), make(plant.d21, plant.g22, "f21"),
                         make(plant.d12, plant.g11, "f12"), make(plant.d22, plant.g22, "f22")};
}

ConditionalIntegratorConfig CiLoop1(double ts) { return {0.4, 1.0, ts, 1e-9}; }
ConditionalIntegratorConfig CiLoop2(double ts) { return {0.5, 0.5, ts, 1e-9}; }

ControllerConfig DefaultController(const PlantModel& plant) {
  const PidPair pids = C1Default(plant);
  ControllerConfig cfg;
  cfg.pid1 = pids.loop1;
  cfg.pid2 = pids.loop2;
  cfg.feedforward = SynthesizedFeedforward(plant);
  cfg.ci1 = CiLoop1(plant.ts);
  cfg.ci2 = CiLoop2(plant.ts);
  return cfg;
}

}  // namespace rcsim::presets
