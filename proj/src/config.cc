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

#include "rcsim/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "rcsim/errors.h"

namespace rcsim {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

void CheckKeys(const json& obj, const std::string& path,
               std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) Fail(path, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto k : allowed) known = known || item.key() == k;
    if (!known) Fail(path, "unknown field '" + item.key() + "'");
  }
}

std::string Child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

double Number(const json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(path, "expected a finite number");
  return v;
}

// null stands for an unbounded value.
double NumberOr(const json& j, const std::string& path, double if_null) {
  return j.is_null() ? if_null : Number(j, path);
}

void Read(const json& obj, const std::string& path, std::string_view key, double& out) {
  if (obj.contains(key)) out = Number(obj.at(key), Child(path, key));
}

void ReadUnbounded(const json& obj, const std::string& path, std::string_view key, double& out,
                   double if_null) {
  if (obj.contains(key)) out = NumberOr(obj.at(key), Child(path, key), if_null);
}

std::string String(const json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a string");
  return j.get<std::string>();
}

bool Bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) Fail(path, "expected true or false");
  return j.get<bool>();
}

Coeffs ReadCoeffs(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) Fail(path, "expected a non-empty array of numbers");
  Coeffs c;
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(Number(j[i], path + "[" + std::to_string(i) + "]"));
  return c;
}

RationalTF ReadTf(const json& j, const std::string& path) {
  CheckKeys(j, path, {"num", "den"});
  if (!j.contains("num") || !j.contains("den")) Fail(path, "needs 'num' and 'den'");
  try {
    return RationalTF(ReadCoeffs(j.at("num"), Child(path, "num")),
                      ReadCoeffs(j.at("den"), Child(path, "den")));
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
}

DiscreteFilter ReadFilter(const json& j, const std::string& path, double default_ts) {
  CheckKeys(j, path, {"num", "den", "ts"});
  if (!j.contains("num") || !j.contains("den")) Fail(path, "needs 'num' and 'den'");
  double ts = default_ts;
  Read(j, path, "ts", ts);
  try {
    return DiscreteFilter(ReadCoeffs(j.at("num"), Child(path, "num")),
                          ReadCoeffs(j.at("den"), Child(path, "den")), ts);
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
}

Schedule ReadSchedule(const json& j, const std::string& path) {
  if (j.is_number()) return {{0.0, Number(j, path)}};
  if (!j.is_array() || j.empty()) Fail(path, "expected a number or an array of [time, value]");
  Schedule s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) Fail(p, "expected [time, value]");
    s.push_back({Number(j[i][0], p + "[0]"), Number(j[i][1], p + "[1]")});
  }
  return s;
}

GainSchedule ReadLut(const json& j, const std::string& path) {
  CheckKeys(j, path, {"breakpoints", "values"});
  if (!j.contains("breakpoints") || !j.contains("values"))
    Fail(path, "needs 'breakpoints' and 'values'");
  try {
    return GainSchedule(ReadCoeffs(j.at("breakpoints"), Child(path, "breakpoints")),
                        ReadCoeffs(j.at("values"), Child(path, "values")));
  } catch (const ConfigError& e) {
    Fail(path, e.what());
  }
}

Scenario ScenarioPreset(const std::string& name, const std::string& path) {
  if (name == presets::kScenario) return presets::Pid2018Default();
  Fail(path, "unknown scenario preset '" + name + "'");
}

PlantModel PlantPreset(const std::string& name, const std::string& path) {
  if (name == presets::kPlant) return presets::Pid2018Surrogate();
  Fail(path, "unknown plant preset '" + name + "'");
}

void ApplyScenario(RunConfig& cfg, const json& j) {
  const std::string path = "scenario";
  if (j.is_string()) {
    cfg.scenario_name = j.get<std::string>();
    cfg.scenario = ScenarioPreset(cfg.scenario_name, path);
    return;
  }
  CheckKeys(j, path, {"preset", "ts", "horizon", "ref1", "ref2", "dist1", "dist2", "windows"});
  if (j.contains("preset")) {
    cfg.scenario_name = String(j.at("preset"), Child(path, "preset"));
    cfg.scenario = ScenarioPreset(cfg.scenario_name, Child(path, "preset"));
  }
  Scenario& s = cfg.scenario;
  Read(j, path, "ts", s.ts);
  Read(j, path, "horizon", s.horizon);
  const std::pair<std::string_view, Schedule*> schedules[] = {
      {"ref1", &s.ref1}, {"ref2", &s.ref2}, {"dist1", &s.dist1}, {"dist2", &s.dist2}};
  bool custom = j.contains("ts") || j.contains("horizon");
  for (const auto& [key, target] : schedules) {
    if (!j.contains(key)) continue;
    *target = ReadSchedule(j.at(key), Child(path, key));
    custom = true;
  }
  if (j.contains("windows")) {
    const json& w = j.at("windows");
    const std::string wp = Child(path, "windows");
    if (!w.is_array() || w.size() != s.windows.size()) Fail(wp, "expected an array of 4 windows");
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string p = wp + "[" + std::to_string(i) + "]";
      CheckKeys(w[i], p, {"loop", "tc", "length"});
      if (w[i].contains("loop")) {
        const double loop = Number(w[i].at("loop"), Child(p, "loop"));
        if (loop != 1.0 && loop != 2.0) Fail(Child(p, "loop"), "must be 1 or 2");
        s.windows[i].loop = static_cast<int>(loop);
      }
      Read(w[i], p, "tc", s.windows[i].tc);
      Read(w[i], p, "length", s.windows[i].length);
    }
    custom = true;
  }
  if (custom && !j.contains("preset")) cfg.scenario_name = "custom";
}

void ApplyPlant(RunConfig& cfg, const json& j) {
  const std::string path = "plant";
  if (j.is_string()) {
    cfg.plant_name = j.get<std::string>();
    cfg.plant = PlantPreset(cfg.plant_name, path);
    return;
  }
  CheckKeys(j, path,
            {"preset", "g11", "g22", "d11", "d21", "d12", "d22", "lut1", "lut2",
             "operating_point", "limits", "ts"});
  if (j.contains("preset")) {
    cfg.plant_name = String(j.at("preset"), Child(path, "preset"));
    cfg.plant = PlantPreset(cfg.plant_name, Child(path, "preset"));
  }
  PlantModel& p = cfg.plant;
  const std::pair<std::string_view, RationalTF*> blocks[] = {
      {"g11", &p.g11}, {"g22", &p.g22}, {"d11", &p.d11},
      {"d21", &p.d21}, {"d12", &p.d12}, {"d22", &p.d22}};
  for (const auto& [key, target] : blocks)
    if (j.contains(key)) *target = ReadTf(j.at(key), Child(path, key));
  if (j.contains("lut1")) p.lut1 = ReadLut(j.at("lut1"), Child(path, "lut1"));
  if (j.contains("lut2")) p.lut2 = ReadLut(j.at("lut2"), Child(path, "lut2"));
  if (j.contains("operating_point")) {
    const json& o = j.at("operating_point");
    const std::string op = Child(path, "operating_point");
    CheckKeys(o, op, {"av0", "n0", "te_sec_out0", "tsh0", "tc_sec_in0", "te_sec_in0"});
    Read(o, op, "av0", p.op.av0);
    Read(o, op, "n0", p.op.n0);
    Read(o, op, "te_sec_out0", p.op.te_sec_out0);
    Read(o, op, "tsh0", p.op.tsh0);
    Read(o, op, "tc_sec_in0", p.op.tc_sec_in0);
    Read(o, op, "te_sec_in0", p.op.te_sec_in0);
  }
  if (j.contains("limits")) {
    const json& l = j.at("limits");
    const std::string lp = Child(path, "limits");
    CheckKeys(l, lp, {"av_min", "av_max", "n_min", "n_max"});
    Read(l, lp, "av_min", p.limits.av_min);
    Read(l, lp, "av_max", p.limits.av_max);
    Read(l, lp, "n_min", p.limits.n_min);
    Read(l, lp, "n_max", p.limits.n_max);
  }
  Read(j, path, "ts", p.ts);
  if (!j.contains("preset") && j.size() > 0) cfg.plant_name = "custom";
}

void ApplyPid(PidConfig& pid, const json& j, const std::string& path) {
  CheckKeys(j, path,
            {"kp", "ti", "td", "n_filter", "ts", "out_min", "out_max", "bias", "error_sign"});
  const double inf = std::numeric_limits<double>::infinity();
  Read(j, path, "kp", pid.kp);
  ReadUnbounded(j, path, "ti", pid.ti, inf);
  Read(j, path, "td", pid.td);
  Read(j, path, "n_filter", pid.n_filter);
  Read(j, path, "ts", pid.ts);
  ReadUnbounded(j, path, "out_min", pid.out_min, -inf);
  ReadUnbounded(j, path, "out_max", pid.out_max, inf);
  Read(j, path, "bias", pid.bias);
  Read(j, path, "error_sign", pid.error_sign);
}

void ApplyCi(ConditionalIntegratorConfig& ci, const json& j, const std::string& path) {
  CheckKeys(j, path, {"delta", "w", "ts", "zero_eps"});
  Read(j, path, "delta", ci.delta);
  Read(j, path, "w", ci.w);
  Read(j, path, "ts", ci.ts);
  Read(j, path, "zero_eps", ci.zero_eps);
}

FeedforwardSource ParseSource(const std::string& name, const std::string& path) {
  if (name == "synthesized") return FeedforwardSource::kSynthesized;
  if (name == presets::kPrintedFeedforward) return FeedforwardSource::kPrinted;
  if (name == "custom") return FeedforwardSource::kCustom;
  Fail(path, "unknown feedforward source '" + name + "' (synthesized, paper-ff, custom)");
}

std::string_view SourceName(FeedforwardSource s) {
  switch (s) {
    case FeedforwardSource::kSynthesized: return "synthesized";
    case FeedforwardSource::kPrinted: return presets::kPrintedFeedforward;
    case FeedforwardSource::kCustom: return "custom";
  }
  return "";
}

struct FeedforwardOverrides {
  std::optional<DiscreteFilter> f[4];
  std::optional<bool> enable[4];
};

constexpr std::string_view kSlots[4] = {"f11", "f21", "f12", "f22"};

DiscreteFilter& Slot(FeedforwardBank& b, int i) {
  switch (i) {
    case 0: return b.f11;
    case 1: return b.f21;
    case 2: return b.f12;
    default: return b.f22;
  }
}

bool& Enable(FeedforwardBank& b, int i) {
  switch (i) {
    case 0: return b.enable_f11;
    case 1: return b.enable_f21;
    case 2: return b.enable_f12;
    default: return b.enable_f22;
  }
}

FeedforwardOverrides ReadFeedforward(RunConfig& cfg, const json& j) {
  const std::string path = "controller.feedforward";
  CheckKeys(j, path,
            {"source", "method", "printed_reading", "enable", "f11", "f21", "f12", "f22"});
  FeedforwardOverrides o;
  if (j.contains("source"))
    cfg.ff_source = ParseSource(String(j.at("source"), Child(path, "source")),
                                Child(path, "source"));
  if (j.contains("method")) {
    const std::string p = Child(path, "method");
    try {
      cfg.ff_method = ParseDiscretization(String(j.at("method"), p));
    } catch (const ConfigError& e) {
      Fail(p, e.what());
    }
  }
  if (j.contains("printed_reading")) {
    const std::string p = Child(path, "printed_reading");
    const std::string r = String(j.at("printed_reading"), p);
    if (r == "single-minus") cfg.printed_double_minus = false;
    else if (r == "double-minus") cfg.printed_double_minus = true;
    else Fail(p, "expected 'single-minus' or 'double-minus'");
  }
  if (j.contains("enable")) {
    const json& e = j.at("enable");
    const std::string ep = Child(path, "enable");
    CheckKeys(e, ep, {"f11", "f21", "f12", "f22"});
    for (int i = 0; i < 4; ++i)
      if (e.contains(kSlots[i])) o.enable[i] = Bool(e.at(kSlots[i]), Child(ep, kSlots[i]));
  }
  bool any_filter = false;
  for (int i = 0; i < 4; ++i) {
    if (!j.contains(kSlots[i])) continue;
    o.f[i] = ReadFilter(j.at(kSlots[i]), Child(path, kSlots[i]), cfg.plant.ts);
    any_filter = true;
  }
  if (cfg.ff_source == FeedforwardSource::kCustom && !any_filter)
    Fail(path, "source 'custom' needs at least one filter");
  if (any_filter) cfg.ff_source = FeedforwardSource::kCustom;
  return o;
}

json TfToJson(const RationalTF& tf) { return {{"num", tf.num()}, {"den", tf.den()}}; }

json FilterToJson(const DiscreteFilter& f) {
  return {{"num", f.num()}, {"den", f.den()}, {"ts", f.ts()}};
}

json Unbounded(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json PidToJson(const PidConfig& p) {
  return {{"kp", p.kp},           {"ti", Unbounded(p.ti)},
          {"td", p.td},           {"n_filter", p.n_filter},
          {"ts", p.ts},           {"out_min", Unbounded(p.out_min)},
          {"out_max", Unbounded(p.out_max)}, {"bias", p.bias},
          {"error_sign", p.error_sign}};
}

json ScheduleToJson(const Schedule& s) {
  json a = json::array();
  for (const auto& step : s) a.push_back({step.time, step.value});
  return a;
}

void ValidateRunConfig(const RunConfig& cfg) {
  cfg.scenario.Validate();
  cfg.plant.Validate();
  try {
    cfg.controller.pid1.Validate();
  } catch (const ConfigError& e) {
    Fail("controller.pid.loop1", e.what());
  }
  try {
    cfg.controller.pid2.Validate();
  } catch (const ConfigError& e) {
    Fail("controller.pid.loop2", e.what());
  }
  if (cfg.controller.feedforward) {
    try {
      cfg.controller.feedforward->Validate();
    } catch (const ConfigError& e) {
      Fail("controller.feedforward", e.what());
    }
  }
  if (cfg.controller.ci1) cfg.controller.ci1->Validate();
  if (cfg.controller.ci2) cfg.controller.ci2->Validate();
  if (cfg.kind != ControllerKind::kC1 && !cfg.controller.feedforward)
    Fail("controller.feedforward", "required by " + std::string(ToString(cfg.kind)));
}

std::pair<int, int> LineColumn(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

RunConfig DefaultRunConfig() { return RunConfig{}; }

void RebuildFeedforward(RunConfig& cfg) {
  std::optional<FeedforwardBank> previous = cfg.controller.feedforward;
  switch (cfg.ff_source) {
    case FeedforwardSource::kSynthesized:
      try {
        cfg.controller.feedforward = presets::SynthesizedFeedforward(cfg.plant, cfg.ff_method);
      } catch (const InfeasibleError&) {
        if (cfg.kind != ControllerKind::kC1) throw;
        cfg.controller.feedforward.reset();
      }
      break;
    case FeedforwardSource::kPrinted:
      cfg.controller.feedforward = presets::PrintedFeedforward(
          cfg.printed_double_minus ? presets::PrintedReading::kDoubleMinus
                                   : presets::PrintedReading::kSingleMinus);
      break;
    case FeedforwardSource::kCustom:
      return;
  }
  if (previous && cfg.controller.feedforward) {
    for (int i = 0; i < 4; ++i)
      Enable(*cfg.controller.feedforward, i) = Enable(*previous, i);
  }
}

void SetSamplingPeriod(RunConfig& cfg, double ts) {
  if (!(ts > 0.0) || !std::isfinite(ts)) throw ConfigError("ts must be a positive number");
  cfg.scenario.ts = ts;
  cfg.plant.ts = ts;
  cfg.controller.pid1.ts = ts;
  cfg.controller.pid2.ts = ts;
  if (cfg.controller.ci1) cfg.controller.ci1->ts = ts;
  if (cfg.controller.ci2) cfg.controller.ci2->ts = ts;
  if (cfg.ff_source == FeedforwardSource::kPrinted && ts != 1.0)
    throw ConfigError("feedforward source 'paper-ff' is only defined at ts = 1");
  if (cfg.ff_source == FeedforwardSource::kCustom && cfg.controller.feedforward) {
    for (int i = 0; i < 4; ++i)
      if (Slot(*cfg.controller.feedforward, i).ts() != ts)
        throw ConfigError("custom feedforward filter " + std::string(kSlots[i]) +
                          " is not sampled at ts = " + FormatNumber(ts));
  }
  RebuildFeedforward(cfg);
}

void SetHorizon(RunConfig& cfg, double horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw ConfigError("horizon must be a positive number");
  cfg.scenario.horizon = horizon;
  cfg.scenario.Validate();
}

RunConfig ParseRunConfig(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = LineColumn(json_text, e.byte);
    std::string detail = e.what();
    const auto colon = detail.find(": ", detail.find("column"));
    if (colon != std::string::npos) detail = detail.substr(colon + 2);
    throw ConfigError("config parse error at line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + detail);
  }
  if (!root.is_object()) throw ConfigError("config: top level must be an object");
  CheckKeys(root, "config", {"scenario", "plant", "controller", "weights", "ts", "horizon"});

  RunConfig cfg;
  if (root.contains("scenario")) ApplyScenario(cfg, root.at("scenario"));
  if (root.contains("plant")) {
    ApplyPlant(cfg, root.at("plant"));
    cfg.plant.Validate();
  }

  const json controller = root.value("controller", json::object());
  const std::string cpath = "controller";
  CheckKeys(controller, cpath, {"kind", "pid", "feedforward", "ci"});
  if (controller.contains("kind")) {
    const std::string p = Child(cpath, "kind");
    try {
      cfg.kind = ParseControllerKind(String(controller.at("kind"), p));
    } catch (const ConfigError& e) {
      Fail(p, e.what());
    }
  }

  // Gains, biases and limits follow the final plant.
  const presets::PidPair pids = presets::C1Default(cfg.plant);
  cfg.controller.pid1 = pids.loop1;
  cfg.controller.pid2 = pids.loop2;
  cfg.controller.ci1 = presets::CiLoop1(cfg.plant.ts);
  cfg.controller.ci2 = presets::CiLoop2(cfg.plant.ts);
  if (controller.contains("pid")) {
    const json& pid = controller.at("pid");
    const std::string pp = Child(cpath, "pid");
    if (pid.is_string()) {
      if (pid.get<std::string>() != presets::kPid) Fail(pp, "unknown PID preset");
    } else {
      CheckKeys(pid, pp, {"preset", "loop1", "loop2"});
      if (pid.contains("preset") && String(pid.at("preset"), Child(pp, "preset")) != presets::kPid)
        Fail(Child(pp, "preset"), "unknown PID preset");
      if (pid.contains("loop1")) ApplyPid(cfg.controller.pid1, pid.at("loop1"), Child(pp, "loop1"));
      if (pid.contains("loop2")) ApplyPid(cfg.controller.pid2, pid.at("loop2"), Child(pp, "loop2"));
    }
  }
  if (controller.contains("ci")) {
    const json& ci = controller.at("ci");
    const std::string cip = Child(cpath, "ci");
    CheckKeys(ci, cip, {"loop1", "loop2"});
    if (ci.contains("loop1")) ApplyCi(*cfg.controller.ci1, ci.at("loop1"), Child(cip, "loop1"));
    if (ci.contains("loop2")) ApplyCi(*cfg.controller.ci2, ci.at("loop2"), Child(cip, "loop2"));
  }

  FeedforwardOverrides ff;
  if (controller.contains("feedforward")) ff = ReadFeedforward(cfg, controller.at("feedforward"));
  if (cfg.ff_source == FeedforwardSource::kCustom) {
    FeedforwardBank bank = [&] {
      try {
        return presets::SynthesizedFeedforward(cfg.plant, cfg.ff_method);
      } catch (const InfeasibleError&) {
        for (const auto& f : ff.f)
          if (!f) throw;
        return FeedforwardBank{*ff.f[0], *ff.f[1], *ff.f[2], *ff.f[3]};
      }
    }();
    for (int i = 0; i < 4; ++i)
      if (ff.f[i]) Slot(bank, i) = *ff.f[i];
    cfg.controller.feedforward = bank;
  } else {
    cfg.controller.feedforward.reset();
    RebuildFeedforward(cfg);
  }
  if (cfg.controller.feedforward) {
    for (int i = 0; i < 4; ++i)
      if (ff.enable[i]) Enable(*cfg.controller.feedforward, i) = *ff.enable[i];
  }

  if (root.contains("weights")) {
    const json& w = root.at("weights");
    if (w.is_string()) {
      cfg.weights = ParseWeights(w.get<std::string>());
    } else {
      const Coeffs v = ReadCoeffs(w, "weights");
      if (v.size() != kIndexCount) Fail("weights", "expected 8 values");
      std::copy(v.begin(), v.end(), cfg.weights.w.begin());
    }
    try {
      cfg.weights.Validate();
    } catch (const ConfigError& e) {
      Fail("weights", e.what());
    }
  }
  if (root.contains("ts")) SetSamplingPeriod(cfg, Number(root.at("ts"), "ts"));
  if (root.contains("horizon")) SetHorizon(cfg, Number(root.at("horizon"), "horizon"));

  ValidateRunConfig(cfg);
  return cfg;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseRunConfig(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string DumpRunConfig(const RunConfig& cfg) {
  const Scenario& s = cfg.scenario;
  json windows = json::array();
  for (const auto& w : s.windows)
    windows.push_back({{"loop", w.loop}, {"tc", w.tc}, {"length", w.length}});
  const PlantModel& p = cfg.plant;
  json lut1 = {{"breakpoints", p.lut1.breakpoints()}, {"values", p.lut1.values()}};
  json lut2 = {{"breakpoints", p.lut2.breakpoints()}, {"values", p.lut2.values()}};

  json controller = {{"kind", ToString(cfg.kind)},
                     {"pid", {{"loop1", PidToJson(cfg.controller.pid1)},
                              {"loop2", PidToJson(cfg.controller.pid2)}}}};
  json ci = json::object();
  if (cfg.controller.ci1)
    ci["loop1"] = {{"delta", cfg.controller.ci1->delta}, {"w", cfg.controller.ci1->w},
                   {"ts", cfg.controller.ci1->ts}, {"zero_eps", cfg.controller.ci1->zero_eps}};
  if (cfg.controller.ci2)
    ci["loop2"] = {{"delta", cfg.controller.ci2->delta}, {"w", cfg.controller.ci2->w},
                   {"ts", cfg.controller.ci2->ts}, {"zero_eps", cfg.controller.ci2->zero_eps}};
  controller["ci"] = ci;
  json ff = {{"source", SourceName(cfg.ff_source)},
             {"method", ToString(cfg.ff_method)},
             {"printed_reading", cfg.printed_double_minus ? "double-minus" : "single-minus"}};
  if (cfg.controller.feedforward) {
    FeedforwardBank bank = *cfg.controller.feedforward;
    json enable = json::object();
    for (int i = 0; i < 4; ++i) {
      enable[std::string(kSlots[i])] = Enable(bank, i);
      if (cfg.ff_source == FeedforwardSource::kCustom)
        ff[std::string(kSlots[i])] = FilterToJson(Slot(bank, i));
    }
    ff["enable"] = enable;
  }
  controller["feedforward"] = ff;

  json root = {
      {"scenario",
       {{"ts", s.ts},
        {"horizon", s.horizon},
        {"ref1", ScheduleToJson(s.ref1)},
        {"ref2", ScheduleToJson(s.ref2)},
        {"dist1", ScheduleToJson(s.dist1)},
        {"dist2", ScheduleToJson(s.dist2)},
        {"windows", windows}}},
      {"plant",
       {{"g11", TfToJson(p.g11)},
        {"g22", TfToJson(p.g22)},
        {"d11", TfToJson(p.d11)},
        {"d21", TfToJson(p.d21)},
        {"d12", TfToJson(p.d12)},
        {"d22", TfToJson(p.d22)},
        {"lut1", lut1},
        {"lut2", lut2},
        {"operating_point",
         {{"av0", p.op.av0},
          {"n0", p.op.n0},
          {"te_sec_out0", p.op.te_sec_out0},
          {"tsh0", p.op.tsh0},
          {"tc_sec_in0", p.op.tc_sec_in0},
          {"te_sec_in0", p.op.te_sec_in0}}},
        {"limits",
         {{"av_min", p.limits.av_min},
          {"av_max", p.limits.av_max},
          {"n_min", p.limits.n_min},
          {"n_max", p.limits.n_max}}},
        {"ts", p.ts}}},
      {"controller", controller},
      {"weights", cfg.weights.w},
  };
  return root.dump(2) + "\n";
}

std::string TransferFunctionJson(const RationalTF& tf) { return TfToJson(tf).dump(); }

std::string FilterJson(const DiscreteFilter& f) { return FilterToJson(f).dump(); }

IndexWeights ParseWeights(std::string_view text) {
  if (text == "equal") return IndexWeights::Equal();
  if (text == "reconstructed") return IndexWeights::Reconstructed();
  if (text == "prior") return IndexWeights::Prior();
  IndexWeights w;
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size())
      throw ConfigError("weights: '" + std::string(field) + "' is not a number");
    if (count == kIndexCount) throw ConfigError("weights: expected 8 values");
    w.w[count++] = v;
    pos = end + 1;
  }
  if (count != kIndexCount)
    throw ConfigError("weights: expected 8 values or one of equal, reconstructed, prior");
  w.Validate();
  return w;
}

}  // namespace rcsim
