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

#include "rcsim/plant.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rcsim/errors.h"

namespace rcsim {

GainSchedule::GainSchedule(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size())
    throw ConfigError("gain schedule needs equally many (>= 1) breakpoints and values");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw ConfigError("gain schedule breakpoints must be strictly increasing");
}

double GainSchedule::operator()(double x) const {
  if (x <= breakpoints_.front()) return values_.front();
  if (x >= breakpoints_.back()) return values_.back();
  const auto hi = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const std::size_t i = static_cast<std::size_t>(hi - breakpoints_.begin()) - 1;
  const double x0 = breakpoints_[i];
  if (x == x0) return values_[i];
  const double t = (x - x0) / (breakpoints_[i + 1] - x0);
  return values_[i] + t * (values_[i + 1] - values_[i]);
}

void PlantModel::Validate() const {
  if (!(ts > 0.0)) throw ConfigError("plant.ts must be > 0");
  const std::pair<const char*, const RationalTF*> blocks[] = {
      {"g11", &g11}, {"g22", &g22}, {"d11", &d11},
      {"d21", &d21}, {"d12", &d12}, {"d22", &d22}};
  for (const auto& [name, tf] : blocks) {
    if (!tf->is_proper()) throw ConfigError(std::string("plant.") + name + " is improper");
    if (!tf->is_stable()) throw ConfigError(std::string("plant.") + name + " is unstable");
  }
  if (!(limits.av_min < limits.av_max) || !(limits.n_min < limits.n_max))
    throw ConfigError("plant.limits: min must be below max");
  if (op.av0 < limits.av_min || op.av0 > limits.av_max)
    throw ConfigError("plant.operating_point.av0 outside actuator range");
  if (op.n0 < limits.n_min || op.n0 > limits.n_max)
    throw ConfigError("plant.operating_point.n0 outside actuator range");
}

Plant::Plant(const PlantModel& model)
    : model_(model),
      g11_(C2d(model.g11, model.ts, Discretization::kZoh)),
      g22_(C2d(model.g22, model.ts, Discretization::kZoh)),
      d11_(C2d(model.d11, model.ts, Discretization::kZoh)),
      d21_(C2d(model.d21, model.ts, Discretization::kZoh)),
      d12_(C2d(model.d12, model.ts, Discretization::kZoh)),
      d22_(C2d(model.d22, model.ts, Discretization::kZoh)),
      applied_{model.op.av0, model.op.n0},
      outputs_{model.op.te_sec_out0, model.op.tsh0} {
  model_.Validate();
}

AppliedInputs Plant::Saturate(double av, double n) const {
  const auto& l = model_.limits;
  return {std::clamp(av, l.av_min, l.av_max), std::clamp(n, l.n_min, l.n_max)};
}

PlantOutputs Plant::Step(double av, double n, double te_sec_in, double tc_sec_in) {
  applied_ = Saturate(av, n);
  const auto& op = model_.op;
  const double dav = applied_.av - op.av0;
  const double dn = applied_.n - op.n0;
  const double dte = te_sec_in - op.te_sec_in0;
  const double dtc = tc_sec_in - op.tc_sec_in0;
  g11_.Step(dav);
  g22_.Step(dn);
  d11_.Step(dte);
  d21_.Step(dte);
  d12_.Step(dtc);
  d22_.Step(dtc);
  // Next-sample outputs with the inputs held (zero-order hold).
  outputs_.te_sec_out = op.te_sec_out0 + model_.lut1(dav) * g11_.Peek(dav) +
                        d11_.Peek(dte) + d12_.Peek(dtc);
  outputs_.tsh = op.tsh0 + model_.lut2(dn) * g22_.Peek(dn) + d21_.Peek(dte) + d22_.Peek(dtc);
  return outputs_;
}

}  // namespace rcsim
