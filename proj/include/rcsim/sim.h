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

#ifndef RCSIM_SIM_H_
#define RCSIM_SIM_H_

#include <array>
#include <functional>
#include <ostream>
#include <vector>

#include "rcsim/control.h"
#include "rcsim/plant.h"

namespace rcsim {

struct ScheduleStep {
  double time;
  double value;
};

// Piecewise-constant signal: each step holds its value from `time` until
// the next step.
using Schedule = std::vector<ScheduleStep>;

double ValueAt(const Schedule& schedule, double t);

// Time-weighted index window on one loop: samples with tc <= t < tc + length.
struct IndexWindow {
  int loop;
  double tc;
  double length;
};

struct Scenario {
  double ts = 1.0;
  double horizon = 1200.0;
  Schedule ref1;   // Te,sec,out setpoint
  Schedule ref2;   // TSH setpoint
  Schedule dist1;  // Te,sec,in
  Schedule dist2;  // Tc,sec,in
  std::array<IndexWindow, 4> windows{};

  // Throws ConfigError on violated invariants.
  void Validate() const;
  // Samples on the grid 0, ts, ..., horizon.
  std::size_t samples() const;
};

struct SimTrace {
  double ts = 1.0;
  std::vector<double> time;
  std::vector<double> r1, y1, r2, y2;
  std::vector<double> av, n;          // applied (saturated)
  std::vector<double> av_cmd, n_cmd;  // controller output before saturation
  std::vector<double> d1, d2;
  std::vector<double> ff_av, ff_n;
  std::vector<double> ci1, ci2;

  std::size_t size() const { return time.size(); }
};

// Additive measurement noise for loop 1 or 2 at sample k. Empty means none.
using MeasurementNoise = std::function<double(int loop, std::size_t k)>;

// Per sample k: read r_k and d_k from the schedules, measure y_k, step the
// controller, then hold the saturated command over one period to obtain
// y_{k+1}. Throws ConfigError for inconsistent sampling periods and
// NumericError naming the step index when a signal becomes non-finite.
SimTrace RunScenario(const Scenario& scenario, const PlantModel& plant, ControllerKind kind,
                     const ControllerConfig& controller, const MeasurementNoise& noise = {});

// Fixed column order: time,r1,y1,r2,y2,av,n,d1,d2,ff_av,ff_n,ci1,ci2.
void WriteTraceCsv(std::ostream& os, const SimTrace& trace);

// Shortest round-trip decimal form; identical input gives identical text.
std::string FormatNumber(double v);

// Actuator samples on a limit within [t0, t1); a sample with both actuators
// saturated counts twice.
std::size_t CountSaturatedSamples(const SimTrace& trace, const ActuatorLimits& limits,
                                  double t0, double t1);

}  // namespace rcsim

#endif  // RCSIM_SIM_H_
