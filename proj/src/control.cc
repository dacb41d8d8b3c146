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

#include "rcsim/control.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rcsim/errors.h"

namespace rcsim {

void PidConfig::Validate() const {
  if (!(ts > 0.0)) throw ConfigError("pid.ts must be > 0");
  if (!(out_min < out_max)) throw ConfigError("pid.out_min must be below pid.out_max");
  if (!(ti > 0.0)) throw ConfigError("pid.ti must be > 0 (use infinity to disable)");
  if (td < 0.0) throw ConfigError("pid.td must be >= 0");
  if (td > 0.0 && !(n_filter > 0.0)) throw ConfigError("pid.n_filter must be > 0 when td > 0");
  if (error_sign != 1.0 && error_sign != -1.0)
    throw ConfigError("pid.error_sign must be +1 or -1");
}

Pid::Pid(const PidConfig& cfg) : cfg_(cfg) { cfg_.Validate(); }

PidOutput Pid::Step(double r, double y, double external) {
  const double e = cfg_.error_sign * (r - y);

  if (cfg_.td > 0.0 && state_.has_prev) {
    const double denom = cfg_.td + cfg_.n_filter * cfg_.ts;
    const double alpha = cfg_.td / denom;
    const double gain = cfg_.td * cfg_.n_filter / denom;
    state_.derivative =
        alpha * state_.derivative - gain * cfg_.error_sign * (y - state_.prev_measurement);
  }
  state_.prev_measurement = y;
  state_.has_prev = true;

  const double increment = std::isfinite(cfg_.ti) ? cfg_.ts * e / cfg_.ti : 0.0;
  const double base = cfg_.bias + cfg_.kp * e + state_.derivative + external;
  double unclamped = base + state_.integral + increment;
  const bool winds_up = (unclamped > cfg_.out_max && increment > 0.0) ||
                        (unclamped < cfg_.out_min && increment < 0.0);
  if (winds_up) {
    unclamped = base + state_.integral;
  } else {
    state_.integral += increment;
  }
  return {unclamped, std::clamp(unclamped, cfg_.out_min, cfg_.out_max)};
}

void FeedforwardBank::Validate() const {
  const double ts = f11.ts();
  for (const DiscreteFilter* f : {&f21, &f12, &f22})
    if (f->ts() != ts) throw ConfigError("feedforward filters must share one sampling period");
}

FeedforwardOutput FeedforwardStep(FeedforwardBank& bank, double d_te_sec_in,
                                  double d_tc_sec_in) {
  FeedforwardOutput out{0.0, 0.0};
  if (bank.enable_f11) out.av += bank.f11.Step(d_te_sec_in);
  if (bank.enable_f12) out.av += bank.f12.Step(d_tc_sec_in);
  if (bank.enable_f21) out.n += bank.f21.Step(d_te_sec_in);
  if (bank.enable_f22) out.n += bank.f22.Step(d_tc_sec_in);
  return out;
}

void ConditionalIntegratorConfig::Validate() const {
  if (!(delta > 0.0)) throw ConfigError("ci.delta must be > 0");
  if (!(w >= 0.0)) throw ConfigError("ci.w must be >= 0");
  if (!(ts > 0.0)) throw ConfigError("ci.ts must be > 0");
  if (!(zero_eps >= 0.0) || !(zero_eps < delta))
    throw ConfigError("ci.zero_eps must satisfy 0 <= zero_eps < delta");
}

double ConditionalIntegratorStep(const ConditionalIntegratorConfig& cfg,
                                 ConditionalIntegratorState& state, double e) {
  if (std::abs(e) <= cfg.zero_eps) {
    state.integral = 0.0;
    state.prev_error_sign = 0;
    return 0.0;
  }
  const int sign = e > 0.0 ? 1 : -1;
  if (state.prev_error_sign != 0 && sign != state.prev_error_sign) state.integral = 0.0;
  state.prev_error_sign = sign;
  if (std::abs(e) <= cfg.delta) state.integral += cfg.ts * e;
  return cfg.w * state.integral;
}

std::string_view ToString(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::kC1: return "C1";
    case ControllerKind::kC2: return "C2";
    case ControllerKind::kC3: return "C3";
  }
  return "?";
}

ControllerKind ParseControllerKind(std::string_view name) {
  if (name == "C1" || name == "c1") return ControllerKind::kC1;
  if (name == "C2" || name == "c2") return ControllerKind::kC2;
  if (name == "C3" || name == "c3") return ControllerKind::kC3;
  throw ConfigError("unknown controller '" + std::string(name) + "' (expected C1, C2 or C3)");
}

Controller::Controller(ControllerKind kind, const ControllerConfig& cfg)
    : kind_(kind), pid1_(cfg.pid1), pid2_(cfg.pid2) {
  if (kind != ControllerKind::kC1) {
    if (!cfg.feedforward) throw ConfigError(std::string(ToString(kind)) + " requires a feedforward bank");
    cfg.feedforward->Validate();
    ff_ = cfg.feedforward;
    ff_->f11.Reset();
    ff_->f21.Reset();
    ff_->f12.Reset();
    ff_->f22.Reset();
  }
  if (kind == ControllerKind::kC3) {
    if (!cfg.ci1 || !cfg.ci2) throw ConfigError("C3 requires conditional integrator settings for both loops");
    cfg.ci1->Validate();
    cfg.ci2->Validate();
    ci1_cfg_ = cfg.ci1;
    ci2_cfg_ = cfg.ci2;
  }
}

ControllerOutput Controller::Step(const ControllerInput& in) {
  ControllerOutput out{};
  if (ff_) {
    const FeedforwardOutput ff = FeedforwardStep(*ff_, in.d_te_sec_in, in.d_tc_sec_in);
    out.ff_av = ff.av;
    out.ff_n = ff.n;
  }
  if (ci1_cfg_) {
    const double e1 = pid1_.config().error_sign * (in.r1 - in.y1);
    const double e2 = pid2_.config().error_sign * (in.r2 - in.y2);
    out.ci1 = ConditionalIntegratorStep(*ci1_cfg_, ci1_, e1);
    out.ci2 = ConditionalIntegratorStep(*ci2_cfg_, ci2_, e2);
  }
  const PidOutput u1 = pid1_.Step(in.r1, in.y1, out.ff_av + out.ci1);
  const PidOutput u2 = pid2_.Step(in.r2, in.y2, out.ff_n + out.ci2);
  out.av = u1.output;
  out.n = u2.output;
  out.av_unclamped = u1.unclamped;
  out.n_unclamped = u2.unclamped;
  return out;
}

Controller ComposeController(ControllerKind kind, const ControllerConfig& cfg) {
  return Controller(kind, cfg);
}

}  // namespace rcsim
