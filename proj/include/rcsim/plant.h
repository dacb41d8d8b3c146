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

#ifndef RCSIM_PLANT_H_
#define RCSIM_PLANT_H_

#include <vector>

#include "rcsim/lti.h"

namespace rcsim {

// Piecewise-linear lookup table over ascending breakpoints, clamped to the
// end values outside the breakpoint range.
class GainSchedule {
 public:
  GainSchedule(std::vector<double> breakpoints, std::vector<double> values);

  // A schedule that always returns 1 (pure LTI channel).
  static GainSchedule Unity() { return GainSchedule({0.0}, {1.0}); }

  double operator()(double x) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

inline double LutEval(const GainSchedule& sched, double x) { return sched(x); }

struct OperatingPoint {
  double av0 = 48.79;         // % valve opening
  double n0 = 36.45;          // Hz compressor speed
  double te_sec_out0 = -22.15;  // degC
  double tsh0 = 14.65;        // degC
  double tc_sec_in0 = 30.0;   // degC
  double te_sec_in0 = -20.0;  // degC
};

struct ActuatorLimits {
  double av_min = 10.0;
  double av_max = 100.0;
  double n_min = 30.0;
  double n_max = 50.0;
};

// Identified surrogate. Disturbance paths are indexed (output, disturbance):
// disturbance 1 is Te,sec,in and disturbance 2 is Tc,sec,in.
struct PlantModel {
  RationalTF g11;  // Av -> Te,sec,out
  RationalTF g22;  // N -> TSH
  RationalTF d11;  // Te,sec,in -> Te,sec,out
  RationalTF d21;  // Te,sec,in -> TSH
  RationalTF d12;  // Tc,sec,in -> Te,sec,out
  RationalTF d22;  // Tc,sec,in -> TSH
  GainSchedule lut1;
  GainSchedule lut2;
  OperatingPoint op;
  ActuatorLimits limits;
  double ts = 1.0;

  // Throws ConfigError when a block is unstable or improper, the operating
  // point lies outside the actuator ranges, or ts <= 0.
  void Validate() const;
};

struct PlantOutputs {
  double te_sec_out;
  double tsh;
};

struct AppliedInputs {
  double av;
  double n;
};

// Mutable simulation state of a PlantModel: the six ZOH-discretised blocks,
// the last applied (saturated) inputs, and the current outputs. Starts at
// the operating point.
class Plant {
 public:
  explicit Plant(const PlantModel& model);

  // Outputs at the current sample.
  PlantOutputs outputs() const { return outputs_; }
  AppliedInputs applied() const { return applied_; }
  const PlantModel& model() const { return model_; }

  // Saturates the commanded inputs, holds them together with the measured
  // disturbances over one sampling period, and returns the outputs at the
  // next sample:
  //   y1 = te_sec_out0 + lut1(dAv) * G11[dAv] + D11[dTe] + D12[dTc]
  //   y2 = tsh0        + lut2(dN)  * G22[dN]  + D21[dTe] + D22[dTc]
  PlantOutputs Step(double av, double n, double te_sec_in, double tc_sec_in);

  AppliedInputs Saturate(double av, double n) const;

 private:
  PlantModel model_;
  DiscreteFilter g11_, g22_, d11_, d21_, d12_, d22_;
  AppliedInputs applied_;
  PlantOutputs outputs_;
};

}  // namespace rcsim

#endif  // RCSIM_PLANT_H_
