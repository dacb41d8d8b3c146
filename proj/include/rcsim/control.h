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

#ifndef RCSIM_CONTROL_H_
#define RCSIM_CONTROL_H_

#include <limits>
#include <optional>
#include <string_view>

#include "rcsim/lti.h"

namespace rcsim {

// Parallel PID: u = bias + kp*e + (1/ti)*sum(ts*e) + derivative term, with the
// derivative taken on the measurement through a first-order filter with time
// constant td/n_filter. e = error_sign * (r - y); error_sign = -1 serves plants
// with negative static gain.
struct PidConfig {
  double kp = 0.0;
  double ti = std::numeric_limits<double>::infinity();
  double td = 0.0;
  double n_filter = 10.0;
  double ts = 1.0;
  double out_min = -std::numeric_limits<double>::infinity();
  double out_max = std::numeric_limits<double>::infinity();
  double bias = 0.0;
  double error_sign = 1.0;

  // Throws ConfigError when an invariant is violated.
  void Validate() const;
};

struct PidState {
  double integral = 0.0;
  double derivative = 0.0;
  double prev_measurement = 0.0;
  bool has_prev = false;
};

struct PidOutput {
  double unclamped;  // bias + P + I + D + external
  double output;     // clamped to [out_min, out_max]
};

class Pid {
 public:
  explicit Pid(const PidConfig& cfg);

  // `external` is added before clamping (feedforward, conditional
  // integrator). The integrator is frozen on any sample where integrating
  // would push the clamped output further into saturation.
  PidOutput Step(double r, double y, double external = 0.0);

  const PidConfig& config() const { return cfg_; }
  const PidState& state() const { return state_; }

 private:
  PidConfig cfg_;
  PidState state_;
};

// Two feedforward compensators per disturbance. fij maps disturbance j to the
// command of loop i: f11, f21 take the Te,sec,in deviation and f12, f22 the
// Tc,sec,in deviation; loop 1 drives Av and loop 2 drives N.
struct FeedforwardBank {
  DiscreteFilter f11;
  DiscreteFilter f21;
  DiscreteFilter f12;
  DiscreteFilter f22;
  bool enable_f11 = true;
  bool enable_f21 = true;
  bool enable_f12 = false;
  bool enable_f22 = true;

  // Throws ConfigError when the filters disagree on ts.
  void Validate() const;
};

struct FeedforwardOutput {
  double av;
  double n;
};

// Advances every enabled filter by one sample. Disabled paths contribute
// exactly zero.
FeedforwardOutput FeedforwardStep(FeedforwardBank& bank, double d_te_sec_in,
                                  double d_tc_sec_in);

struct ConditionalIntegratorConfig {
  double delta = 1.0;
  double w = 1.0;
  double ts = 1.0;
  double zero_eps = 1e-9;

  void Validate() const;
};

struct ConditionalIntegratorState {
  double integral = 0.0;
  int prev_error_sign = 0;
};

// Clegg-style integrator restricted to a dead-band |e| <= delta, scaled by w.
// Per sample:
//   |e| <= zero_eps          -> integral = 0, output 0
//   sign(e) != previous sign -> integral = 0 (reset), then
//   |e| <= delta             -> integral += ts * e
//   output = w * integral
double ConditionalIntegratorStep(const ConditionalIntegratorConfig& cfg,
                                 ConditionalIntegratorState& state, double e);

enum class ControllerKind { kC1, kC2, kC3 };

std::string_view ToString(ControllerKind kind);
ControllerKind ParseControllerKind(std::string_view name);

struct ControllerConfig {
  PidConfig pid1;  // Te,sec,out -> Av
  PidConfig pid2;  // TSH -> N
  std::optional<FeedforwardBank> feedforward;
  std::optional<ConditionalIntegratorConfig> ci1;
  std::optional<ConditionalIntegratorConfig> ci2;
};

struct ControllerInput {
  double r1, y1, r2, y2;
  double d_te_sec_in;  // deviation from the operating point
  double d_tc_sec_in;
};

struct ControllerOutput {
  double av;  // clamped command
  double n;
  double av_unclamped;
  double n_unclamped;
  double ff_av;
  double ff_n;
  double ci1;
  double ci2;
};

// C1: two PID loops. C2: C1 plus the feedforward bank added to the PID
// outputs. C3: C2 plus a conditional integrator per loop acting on the loop
// error, its output added to the control signal.
class Controller {
 public:
  ControllerOutput Step(const ControllerInput& in);

  ControllerKind kind() const { return kind_; }
  const Pid& pid1() const { return pid1_; }
  const Pid& pid2() const { return pid2_; }

 private:
  friend Controller ComposeController(ControllerKind, const ControllerConfig&);
  Controller(ControllerKind kind, const ControllerConfig& cfg);

  ControllerKind kind_;
  Pid pid1_;
  Pid pid2_;
  std::optional<FeedforwardBank> ff_;
  std::optional<ConditionalIntegratorConfig> ci1_cfg_;
  std::optional<ConditionalIntegratorConfig> ci2_cfg_;
  ConditionalIntegratorState ci1_;
  ConditionalIntegratorState ci2_;
};

// Throws ConfigError when `cfg` lacks what `kind` needs.
Controller ComposeController(ControllerKind kind, const ControllerConfig& cfg);

}  // namespace rcsim

#endif  // RCSIM_CONTROL_H_
