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

#include "rcsim/sim.h"

#include <charconv>
#include <cmath>
#include <string>

#include "rcsim/errors.h"

namespace rcsim {
namespace {

void ValidateSchedule(const Schedule& s, const char* name, double horizon) {
  if (s.empty() || s.front().time != 0.0)
    throw ConfigError(std::string("scenario.") + name + ": needs an initial value at t = 0");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i].value))
      throw ConfigError(std::string("scenario.") + name + ": non-finite value");
    if (i > 0 && !(s[i].time > s[i - 1].time))
      throw ConfigError(std::string("scenario.") + name + ": step times must be strictly increasing");
    if (!(s[i].time < horizon))
      throw ConfigError(std::string("scenario.") + name + ": step time beyond the horizon");
  }
}

void RequireSameTs(double a, double b, const char* what) {
  if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a)))
    throw ConfigError(std::string("sampling period mismatch between scenario and ") + what);
}

}  // namespace

double ValueAt(const Schedule& schedule, double t) {
  double v = schedule.front().value;
  for (const auto& step : schedule) {
    if (step.time <= t + 1e-9) v = step.value;
    else break;
  }
  return v;
}

void Scenario::Validate() const {
  if (!(ts > 0.0)) throw ConfigError("scenario.ts must be > 0");
  if (!(horizon > 0.0)) throw ConfigError("scenario.horizon must be > 0");
  ValidateSchedule(ref1, "ref1", horizon);
  ValidateSchedule(ref2, "ref2", horizon);
  ValidateSchedule(dist1, "dist1", horizon);
  ValidateSchedule(dist2, "dist2", horizon);
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const auto& w = windows[i];
    const std::string name = "scenario.windows[" + std::to_string(i) + "]";
    if (w.loop != 1 && w.loop != 2) throw ConfigError(name + ".loop must be 1 or 2");
    if (!(w.length > 0.0)) throw ConfigError(name + ".length must be > 0");
    if (w.tc < 0.0 || w.tc + w.length > horizon + ts)
      throw ConfigError(name + " lies outside the simulated horizon");
  }
}

std::size_t Scenario::samples() const {
  return static_cast<std::size_t>(std::floor(horizon / ts + 1e-9)) + 1;
}

SimTrace RunScenario(const Scenario& scenario, const PlantModel& plant_model, ControllerKind kind,
                     const ControllerConfig& cfg, const MeasurementNoise& noise) {
  scenario.Validate();
  RequireSameTs(scenario.ts, plant_model.ts, "plant");
  RequireSameTs(scenario.ts, cfg.pid1.ts, "pid1");
  RequireSameTs(scenario.ts, cfg.pid2.ts, "pid2");
  if (kind != ControllerKind::kC1 && cfg.feedforward)
    RequireSameTs(scenario.ts, cfg.feedforward->f11.ts(), "feedforward");
  if (kind == ControllerKind::kC3) {
    if (cfg.ci1) RequireSameTs(scenario.ts, cfg.ci1->ts, "ci1");
    if (cfg.ci2) RequireSameTs(scenario.ts, cfg.ci2->ts, "ci2");
  }

  Plant plant(plant_model);
  Controller controller = ComposeController(kind, cfg);
  const auto& op = plant_model.op;

  SimTrace trace;
  trace.ts = scenario.ts;
  const std::size_t n = scenario.samples();
  for (auto* v : {&trace.time, &trace.r1, &trace.y1, &trace.r2, &trace.y2, &trace.av, &trace.n,
                  &trace.av_cmd, &trace.n_cmd, &trace.d1, &trace.d2, &trace.ff_av, &trace.ff_n,
                  &trace.ci1, &trace.ci2})
    v->reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * scenario.ts;
    const double r1 = ValueAt(scenario.ref1, t);
    const double r2 = ValueAt(scenario.ref2, t);
    const double d1 = ValueAt(scenario.dist1, t);
    const double d2 = ValueAt(scenario.dist2, t);
    PlantOutputs y = plant.outputs();
    if (noise) {
      y.te_sec_out += noise(1, k);
      y.tsh += noise(2, k);
    }
    const ControllerOutput u = controller.Step(
        {r1, y.te_sec_out, r2, y.tsh, d1 - op.te_sec_in0, d2 - op.tc_sec_in0});
    plant.Step(u.av, u.n, d1, d2);
    const AppliedInputs applied = plant.applied();

    const double row[] = {t,       r1,      y.te_sec_out, r2,   y.tsh,   applied.av,
                          applied.n, u.av_unclamped, u.n_unclamped, d1, d2, u.ff_av,
                          u.ff_n,  u.ci1,   u.ci2};
    for (double v : row)
      if (!std::isfinite(v))
        throw NumericError("simulation produced a non-finite value at step " + std::to_string(k));
    trace.time.push_back(t);
    trace.r1.push_back(r1);
    trace.y1.push_back(y.te_sec_out);
    trace.r2.push_back(r2);
    trace.y2.push_back(y.tsh);
    trace.av.push_back(applied.av);
    trace.n.push_back(applied.n);
    trace.av_cmd.push_back(u.av_unclamped);
    trace.n_cmd.push_back(u.n_unclamped);
    trace.d1.push_back(d1);
    trace.d2.push_back(d2);
    trace.ff_av.push_back(u.ff_av);
    trace.ff_n.push_back(u.ff_n);
    trace.ci1.push_back(u.ci1);
    trace.ci2.push_back(u.ci2);
  }
  return trace;
}

std::string FormatNumber(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void WriteTraceCsv(std::ostream& os, const SimTrace& tr) {
  os << "time,r1,y1,r2,y2,av,n,d1,d2,ff_av,ff_n,ci1,ci2\n";
  for (std::size_t k = 0; k < tr.size(); ++k) {
    const double row[] = {tr.time[k], tr.r1[k], tr.y1[k], tr.r2[k],    tr.y2[k],
                          tr.av[k],   tr.n[k],  tr.d1[k], tr.d2[k],    tr.ff_av[k],
                          tr.ff_n[k], tr.ci1[k], tr.ci2[k]};
    for (std::size_t i = 0; i < std::size(row); ++i) os << (i ? "," : "") << FormatNumber(row[i]);
    os << '\n';
  }
}

std::size_t CountSaturatedSamples(const SimTrace& tr, const ActuatorLimits& l, double t0,
                                  double t1) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < tr.size(); ++k) {
    if (tr.time[k] < t0 - 1e-9 || tr.time[k] >= t1 - 1e-9) continue;
    if (tr.av[k] <= l.av_min || tr.av[k] >= l.av_max) ++count;
    if (tr.n[k] <= l.n_min || tr.n[k] >= l.n_max) ++count;
  }
  return count;
}

}  // namespace rcsim
