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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcsim/ci_tuning.h"
#include "rcsim/config.h"
#include "rcsim/errors.h"
#include "rcsim/ffsynth.h"
#include "rcsim/metrics.h"
#include "rcsim/presets.h"
#include "rcsim/sim.h"
#include "rcsim/sysid.h"

namespace fs = std::filesystem;
using namespace rcsim;

namespace {

struct RunOptions {
  std::vector<std::string> presets;
  std::optional<std::string> controller;
  std::string scenario_file;
  std::string weights;
  std::string out = ".";
  std::optional<double> ts;
  std::optional<double> horizon;
  bool enable_f12 = false;
  bool disable_f11 = false;
  bool disable_f21 = false;
  bool disable_f22 = false;
  std::optional<double> ci1_delta, ci1_w, ci2_delta, ci2_w;
};

void AddRunOptions(CLI::App* cmd, RunOptions& o, bool with_controller) {
  cmd->add_option("--preset", o.presets,
                  "Compiled-in preset(s): pid2018-surrogate, pid2018-default, paper-ff, "
                  "c1-default");
  if (with_controller)
    cmd->add_option("--controller", o.controller, "C1, C2 or C3 (default: the configured kind, C1)");
  cmd->add_option("--scenario", o.scenario_file, "JSON run configuration file");
  cmd->add_option("--weights", o.weights, "w1,...,w8 | equal | reconstructed | prior");
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
  cmd->add_option("--ts", o.ts, "Sampling period [s]");
  cmd->add_option("--horizon", o.horizon, "Simulated time [s]");
  cmd->add_flag("--enable-f12", o.enable_f12, "Enable the Tc,sec,in -> Av compensator");
  cmd->add_flag("--disable-f11", o.disable_f11, "Disable the Te,sec,in -> Av compensator");
  cmd->add_flag("--disable-f21", o.disable_f21, "Disable the Te,sec,in -> N compensator");
  cmd->add_flag("--disable-f22", o.disable_f22, "Disable the Tc,sec,in -> N compensator");
  cmd->add_option("--ci1-delta", o.ci1_delta, "Loop 1 conditional integrator threshold");
  cmd->add_option("--ci1-w", o.ci1_w, "Loop 1 conditional integrator weight");
  cmd->add_option("--ci2-delta", o.ci2_delta, "Loop 2 conditional integrator threshold");
  cmd->add_option("--ci2-w", o.ci2_w, "Loop 2 conditional integrator weight");
}

void ApplyPreset(RunConfig& cfg, const std::string& name) {
  if (name == presets::kPlant) {
    cfg.plant_name = name;
    cfg.plant = presets::Pid2018Surrogate();
  } else if (name == presets::kScenario) {
    cfg.scenario_name = name;
    cfg.scenario = presets::Pid2018Default();
  } else if (name == presets::kPrintedFeedforward) {
    cfg.ff_source = FeedforwardSource::kPrinted;
    RebuildFeedforward(cfg);
  } else if (name == presets::kPid) {
    const presets::PidPair pids = presets::C1Default(cfg.plant);
    cfg.controller.pid1 = pids.loop1;
    cfg.controller.pid2 = pids.loop2;
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
}

RunConfig BuildConfig(const RunOptions& o, const std::optional<std::string>& controller) {
  RunConfig cfg = o.scenario_file.empty() ? DefaultRunConfig() : LoadRunConfig(o.scenario_file);
  if (controller) cfg.kind = ParseControllerKind(*controller);
  for (const auto& p : o.presets) ApplyPreset(cfg, p);
  if (!o.weights.empty()) cfg.weights = ParseWeights(o.weights);
  if (o.ts) SetSamplingPeriod(cfg, *o.ts);
  if (o.horizon) SetHorizon(cfg, *o.horizon);
  if (cfg.kind != ControllerKind::kC1 && !cfg.controller.feedforward) RebuildFeedforward(cfg);
  if (auto& ff = cfg.controller.feedforward) {
    if (o.enable_f12) ff->enable_f12 = true;
    if (o.disable_f11) ff->enable_f11 = false;
    if (o.disable_f21) ff->enable_f21 = false;
    if (o.disable_f22) ff->enable_f22 = false;
  }
  auto& c = cfg.controller;
  if (!c.ci1) c.ci1 = presets::CiLoop1(cfg.plant.ts);
  if (!c.ci2) c.ci2 = presets::CiLoop2(cfg.plant.ts);
  if (o.ci1_delta) c.ci1->delta = *o.ci1_delta;
  if (o.ci1_w) c.ci1->w = *o.ci1_w;
  if (o.ci2_delta) c.ci2->delta = *o.ci2_delta;
  if (o.ci2_w) c.ci2->w = *o.ci2_w;
  c.ci1->Validate();
  c.ci2->Validate();
  return cfg;
}

SimTrace Simulate(const RunConfig& cfg) {
  return RunScenario(cfg.scenario, cfg.plant, cfg.kind, cfg.controller);
}

// Files are only written after every computation succeeded.
void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << content;
  if (!out.flush()) throw ConfigError("write failed for '" + path.string() + "'");
}

std::string TraceCsv(const SimTrace& trace) {
  std::ostringstream os;
  WriteTraceCsv(os, trace);
  return os.str();
}

std::string Summary(const RunConfig& cfg, const SimTrace& trace) {
  std::ostringstream s;
  const auto& c = cfg.controller;
  s << "controller " << ToString(cfg.kind) << "\n";
  s << "plant " << cfg.plant_name << ", scenario " << cfg.scenario_name << "\n";
  s << "samples " << trace.size() << " (ts " << FormatNumber(cfg.scenario.ts) << " s, horizon "
    << FormatNumber(cfg.scenario.horizon) << " s)\n";
  auto pid = [&](const char* name, const PidConfig& p) {
    s << name << " kp " << FormatNumber(p.kp) << " ti " << FormatNumber(p.ti) << " td "
      << FormatNumber(p.td) << " bias " << FormatNumber(p.bias) << " limits ["
      << FormatNumber(p.out_min) << ", " << FormatNumber(p.out_max) << "]\n";
  };
  pid("pid loop1", c.pid1);
  pid("pid loop2", c.pid2);
  if (cfg.kind != ControllerKind::kC1 && c.feedforward) {
    const auto& ff = *c.feedforward;
    s << "feedforward " << (cfg.ff_source == FeedforwardSource::kSynthesized ? "synthesized"
                            : cfg.ff_source == FeedforwardSource::kPrinted   ? "paper-ff"
                                                                             : "custom")
      << " f11 " << (ff.enable_f11 ? "on" : "off") << " f21 " << (ff.enable_f21 ? "on" : "off")
      << " f12 " << (ff.enable_f12 ? "on" : "off") << " f22 " << (ff.enable_f22 ? "on" : "off")
      << "\n";
  }
  if (cfg.kind == ControllerKind::kC3) {
    s << "conditional integrator loop1 delta=" << FormatNumber(c.ci1->delta)
      << " w=" << FormatNumber(c.ci1->w) << "\n";
    s << "conditional integrator loop2 delta=" << FormatNumber(c.ci2->delta)
      << " w=" << FormatNumber(c.ci2->w) << "\n";
  }
  const double t_end = trace.time.back() + trace.ts;
  s << "IAE loop1 " << FormatNumber(Iae(trace, 1, 0.0, t_end)) << "\n";
  s << "IAE loop2 " << FormatNumber(Iae(trace, 2, 0.0, t_end)) << "\n";
  s << "IAVU av " << FormatNumber(Iavu(trace, 1, 0.0, t_end)) << "\n";
  s << "IAVU n " << FormatNumber(Iavu(trace, 2, 0.0, t_end)) << "\n";
  s << "saturated samples " << CountSaturatedSamples(trace, cfg.plant.limits, 0.0, t_end)
    << "\n";
  return s.str();
}

int CmdRun(const RunOptions& o) {
  const RunConfig cfg = BuildConfig(o, o.controller);
  const SimTrace trace = Simulate(cfg);
  const std::string summary = Summary(cfg, trace);
  const std::string csv = TraceCsv(trace);
  WriteFile(fs::path(o.out) / "trace.csv", csv);
  WriteFile(fs::path(o.out) / "summary.txt", summary);
  std::cout << summary;
  return 0;
}

struct CompareOptions {
  RunOptions run;
  std::string candidate = "C2";
  std::string baseline = "C1";
  std::string baseline_scenario_file;
};

bool SameScenario(const Scenario& a, const Scenario& b) {
  auto same_schedule = [](const Schedule& x, const Schedule& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].time != y[i].time || x[i].value != y[i].value) return false;
    return true;
  };
  for (std::size_t i = 0; i < a.windows.size(); ++i)
    if (a.windows[i].loop != b.windows[i].loop || a.windows[i].tc != b.windows[i].tc ||
        a.windows[i].length != b.windows[i].length)
      return false;
  return a.ts == b.ts && a.horizon == b.horizon && same_schedule(a.ref1, b.ref1) &&
         same_schedule(a.ref2, b.ref2) && same_schedule(a.dist1, b.dist1) &&
         same_schedule(a.dist2, b.dist2);
}

int CmdCompare(const CompareOptions& o) {
  const RunConfig cand = BuildConfig(o.run, o.candidate);
  RunOptions base_opts = o.run;
  if (!o.baseline_scenario_file.empty()) base_opts.scenario_file = o.baseline_scenario_file;
  const RunConfig base = BuildConfig(base_opts, o.baseline);
  if (!SameScenario(cand.scenario, base.scenario))
    throw ConfigError("compared runs must share the same scenario");

  auto fut = std::async(std::launch::async, [&] { return Simulate(base); });
  const SimTrace cand_trace = Simulate(cand);
  const SimTrace base_trace = fut.get();

  const IndexReport report =
      RelativeReport(cand_trace, base_trace, cand.scenario.windows, cand.weights);
  const std::string table = FormatReportTable(report, o.candidate, o.baseline);
  const std::string csv = FormatReportCsv(report);
  const fs::path out(o.run.out);
  WriteFile(out / "report.csv", csv);
  WriteFile(out / "report.txt", table);
  WriteFile(out / ("trace_" + o.candidate + ".csv"), TraceCsv(cand_trace));
  if (o.baseline != o.candidate)
    WriteFile(out / ("trace_" + o.baseline + ".csv"), TraceCsv(base_trace));
  std::cout << table;
  return 0;
}

struct SynthOptions {
  std::string d, g;
  std::string d_num, d_den, g_num, g_den;
  double ts = 1.0;
  std::string method = "tustin";
  std::string out;
};

Coeffs ParseCoeffList(const std::string& text, const std::string& what) {
  Coeffs c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stod(item, &used));
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(what + ": '" + item + "' is not a number");
    }
  }
  if (c.empty()) throw ConfigError(what + ": empty coefficient list");
  return c;
}

RationalTF ResolveModel(const std::string& name, const std::string& num, const std::string& den,
                        const char* flag) {
  if (!name.empty()) {
    if (!num.empty() || !den.empty())
      throw ConfigError(std::string("--") + flag + " conflicts with explicit coefficients");
    try {
      return presets::ModelByName(name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (num.empty() || den.empty())
    throw ConfigError(std::string("--") + flag + " or both --" + flag + "-num and --" + flag +
                      "-den are required");
  try {
    return RationalTF(ParseCoeffList(num, std::string(flag) + "-num"),
                      ParseCoeffList(den, std::string(flag) + "-den"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

// Bank slot implemented by -D/G for the named models, or empty.
std::string_view SlotFor(const std::string& d, const std::string& g) {
  if (d == "D11" && g == "G11") return "f11";
  if (d == "D21" && g == "G22") return "f21";
  if (d == "D12" && g == "G11") return "f12";
  if (d == "D22" && g == "G22") return "f22";
  return {};
}

int CmdSynth(const SynthOptions& o) {
  const RationalTF d = ResolveModel(o.d, o.d_num, o.d_den, "d");
  const RationalTF g = ResolveModel(o.g, o.g_num, o.g_den, "g");
  const Discretization method = ParseDiscretization(o.method);
  if (!(o.ts > 0.0)) throw ConfigError("--ts must be > 0");

  RationalDivideNegate(d, g, kCancellationTolerance);
  const SynthesisResult r = SynthesizeFeedforward(d, g, o.ts, method);
  std::ostringstream report;
  report << "continuous " << Describe(r.continuous) << "\n";
  for (const auto& note : r.notes) report << note << "\n";
  if (!r.discrete) {
    std::cerr << report.str();
    throw NumericError("feedforward is unstable and cannot be discretised");
  }
  const std::string json = FilterJson(*r.discrete) + "\n";
  report << "dc gain " << FormatNumber(r.discrete->dc_gain()) << "\n";
  const std::string_view slot = SlotFor(o.d, o.g);
  if (!slot.empty() && o.ts == 1.0) {
    for (const auto& printed : presets::PrintedFilters()) {
      if (printed.path != slot) continue;
      const FilterComparison cmp = CompareFilters(*r.discrete, printed.filter);
      report << "printed " << printed.label << " dc gain " << FormatNumber(cmp.dc_reference)
             << ", delta " << FormatNumber(cmp.dc_synthesized - cmp.dc_reference) << ", ratio "
             << FormatNumber(cmp.dc_ratio) << ", max coefficient delta "
             << FormatNumber(cmp.max_abs_coeff_delta) << "\n";
    }
  }
  if (!o.out.empty()) WriteFile(o.out, json);
  std::cout << json;
  std::cerr << report.str();
  return 0;
}

struct FitOptions {
  int order = 2;
  std::string input;
  double amplitude = 1.0;
  std::string out;
};

StepExperiment ReadStepCsv(const std::string& path, double amplitude) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::vector<double> time, value;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected 'time,value'");
    try {
      std::size_t u1 = 0, u2 = 0;
      const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
      const double t = std::stod(a, &u1);
      const double v = std::stod(b, &u2);
      if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(line);
      time.push_back(t);
      value.push_back(v);
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected 'time,value'");
    }
  }
  if (time.size() < 2) throw ConfigError(path + ": too few samples");
  const double ts = time[1] - time[0];
  for (std::size_t i = 1; i < time.size(); ++i)
    if (std::abs(time[i] - time[i - 1] - ts) > 1e-9 * std::max(1.0, std::abs(ts)))
      throw ConfigError(path + ": samples are not uniformly spaced");
  StepExperiment exp;
  exp.ts = ts;
  exp.amplitude = amplitude;
  exp.response = std::move(value);
  return exp;
}

int CmdFit(const FitOptions& o) {
  if (o.order != 1 && o.order != 2) throw ConfigError("--order must be 1 or 2");
  const StepExperiment exp = ReadStepCsv(o.input, o.amplitude);
  const FitResult r = o.order == 2 ? FitSecondOrder(exp) : FitFirstOrder(exp);
  const std::string json = TransferFunctionJson(r.model) + "\n";
  if (!o.out.empty()) WriteFile(o.out, json);
  std::cout << json;
  std::cerr << "model " << Describe(r.model) << "\nsse " << FormatNumber(r.sse)
            << "\nmax deviation " << FormatNumber(r.max_deviation) << "\nconverged "
            << (r.converged ? "yes" : "no") << "\n";
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  return 0;
}

struct StepOptions {
  std::string model;
  double ts = 1.0;
  double horizon = 600.0;
  double amplitude = 1.0;
  std::string out;
};

int CmdStep(const StepOptions& o) {
  RationalTF tf = presets::G11();
  try {
    tf = presets::ModelByName(o.model);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const StepResponse resp = ComputeStepResponse(tf, o.ts, o.horizon, o.amplitude);
  std::ostringstream csv;
  csv << "time,value\n";
  for (std::size_t i = 0; i < resp.time.size(); ++i)
    csv << FormatNumber(resp.time[i]) << "," << FormatNumber(resp.value[i]) << "\n";
  if (o.out.empty()) std::cout << csv.str();
  else WriteFile(o.out, csv.str());
  return 0;
}

int CmdCalibrate() {
  const auto tables = PublishedTables();
  const WeightCalibration cal = CalibrateWeights(tables, IndexWeights::Prior());
  const auto labels = IndexLabels();
  std::cout << "weights\n";
  for (std::size_t i = 0; i < kIndexCount; ++i)
    std::cout << "  " << labels[i] << " " << FormatNumber(cal.weights.w[i]) << "\n";
  std::cout << "table            published  equal      prior      calibrated residual\n";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& tab = tables[t];
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-16s %-10.4f %-10.5f %-10.5f %-10.5f %.3g\n",
                  std::string(tab.name).c_str(), tab.j,
                  CombinedIndex(tab.indices, IndexWeights::Equal()),
                  CombinedIndex(tab.indices, IndexWeights::Prior()),
                  CombinedIndex(tab.indices, cal.weights), cal.residuals[t]);
    std::cout << buf;
  }
  std::cout << "nonnegative " << (cal.nonnegative ? "yes" : "no") << "\n";
  return 0;
}

struct GridOptions {
  RunOptions run;
  std::vector<double> deltas{0.1, 0.2, 0.3, 0.4, 0.5, 0.75, 1.0};
  std::vector<double> ws{0.0, 0.25, 0.5, 0.75, 1.0};
};

int CmdGrid(const GridOptions& o) {
  const RunConfig cfg = BuildConfig(o.run, "C3");
  const CiGridResult r =
      GridSearchCi(cfg.scenario, cfg.plant, cfg.controller, o.deltas, o.ws, cfg.weights);
  std::ostringstream csv;
  csv << "loop,delta,w,j\n";
  for (const auto& c : r.surface1)
    csv << "1," << FormatNumber(c.delta) << "," << FormatNumber(c.w) << "," << FormatNumber(c.j)
        << "\n";
  for (const auto& c : r.surface2)
    csv << "2," << FormatNumber(c.delta) << "," << FormatNumber(c.w) << "," << FormatNumber(c.j)
        << "\n";
  WriteFile(fs::path(o.run.out) / "ci_grid.csv", csv.str());
  std::cout << "loop1 best delta=" << FormatNumber(r.best1.delta) << " w=" << FormatNumber(r.best1.w)
            << " J=" << FormatNumber(r.j1) << "\n";
  std::cout << "loop2 best delta=" << FormatNumber(r.best2.delta) << " w=" << FormatNumber(r.best2.w)
            << " J=" << FormatNumber(r.j2) << "\n";
  return 0;
}

int CmdConfig(const RunOptions& o) {
  std::cout << DumpRunConfig(BuildConfig(o, o.controller));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Refrigeration-cycle control simulation and synthesis toolkit"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Simulate one controller; writes trace.csv and summary.txt");
  AddRunOptions(run, run_opts, true);

  CompareOptions cmp_opts;
  auto* compare = app.add_subcommand("compare", "Relative indices of two controllers");
  AddRunOptions(compare, cmp_opts.run, false);
  compare->add_option("--controller,--candidate", cmp_opts.candidate, "Candidate controller")
      ->capture_default_str();
  compare->add_option("--baseline", cmp_opts.baseline, "Baseline controller")
      ->capture_default_str();
  compare->add_option("--baseline-scenario", cmp_opts.baseline_scenario_file,
                      "Separate configuration file for the baseline run");

  SynthOptions syn_opts;
  auto* synth = app.add_subcommand("synth", "Feedforward -D/G synthesis");
  synth->add_option("--d", syn_opts.d, "Disturbance model name (D11, D21, D12, D22, ...)");
  synth->add_option("--g", syn_opts.g, "Channel model name (G11, G22, ...)");
  synth->add_option("--d-num", syn_opts.d_num, "Disturbance numerator, highest power first");
  synth->add_option("--d-den", syn_opts.d_den, "Disturbance denominator");
  synth->add_option("--g-num", syn_opts.g_num, "Channel numerator");
  synth->add_option("--g-den", syn_opts.g_den, "Channel denominator");
  synth->add_option("--ts", syn_opts.ts, "Sampling period [s]")->capture_default_str();
  synth->add_option("--method", syn_opts.method, "tustin or zoh")->capture_default_str();
  synth->add_option("--out", syn_opts.out, "Write the filter JSON to this file");

  FitOptions fit_opts;
  auto* fit = app.add_subcommand("fit", "Fit a first- or second-order model to a step response");
  fit->add_option("--order", fit_opts.order, "1 or 2")->capture_default_str();
  fit->add_option("--input", fit_opts.input, "CSV with time,value columns")->required();
  fit->add_option("--amplitude", fit_opts.amplitude, "Input step size")->capture_default_str();
  fit->add_option("--out", fit_opts.out, "Write the model JSON to this file");

  StepOptions step_opts;
  auto* step = app.add_subcommand("step", "Sampled step response of a named model");
  step->add_option("--model", step_opts.model, "G11, G22, D11, D21, D12 or D22")->required();
  step->add_option("--ts", step_opts.ts, "Sampling period [s]")->capture_default_str();
  step->add_option("--horizon", step_opts.horizon, "Duration [s]")->capture_default_str();
  step->add_option("--amplitude", step_opts.amplitude, "Step size")->capture_default_str();
  step->add_option("--out", step_opts.out, "CSV file (stdout when omitted)");

  auto* calibrate =
      app.add_subcommand("calibrate", "Reconstruct index weights from the published tables");

  GridOptions grid_opts;
  auto* grid = app.add_subcommand("grid", "Conditional-integrator (delta, w) grid search");
  AddRunOptions(grid, grid_opts.run, false);
  grid->add_option("--deltas", grid_opts.deltas, "Threshold grid")->delimiter(',');
  grid->add_option("--ws", grid_opts.ws, "Weight grid")->delimiter(',');

  RunOptions cfg_opts;
  auto* config = app.add_subcommand("config", "Print the fully resolved run configuration");
  AddRunOptions(config, cfg_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return CmdRun(run_opts);
    if (*compare) return CmdCompare(cmp_opts);
    if (*synth) return CmdSynth(syn_opts);
    if (*fit) return CmdFit(fit_opts);
    if (*step) return CmdStep(step_opts);
    if (*calibrate) return CmdCalibrate();
    if (*grid) return CmdGrid(grid_opts);
    if (*config) return CmdConfig(cfg_opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 4;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
