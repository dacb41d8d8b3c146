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

#ifndef RCSIM_CONFIG_H_
#define RCSIM_CONFIG_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "rcsim/control.h"
#include "rcsim/lti.h"
#include "rcsim/metrics.h"
#include "rcsim/plant.h"
#include "rcsim/presets.h"
#include "rcsim/sim.h"

namespace rcsim {

enum class FeedforwardSource { kSynthesized, kPrinted, kCustom };

// Everything one simulation run needs. Built from the compiled-in presets
// and overridden field by field from a JSON document:
//
//   {
//     "scenario":   "pid2018-default" | { "preset": ..., "ts": 1, "horizon": 1200,
//                    "ref1": [[t, v], ...], "ref2": ..., "dist1": ..., "dist2": ...,
//                    "windows": [{"loop": 1, "tc": 540, "length": 120}, ...] },
//     "plant":      "pid2018-surrogate" | { "preset": ..., "g11": {"num": [...], "den": [...]},
//                    ..., "lut1": {"breakpoints": [...], "values": [...]},
//                    "operating_point": {...}, "limits": {...}, "ts": 1 },
//     "controller": { "kind": "C1" | "C2" | "C3",
//                     "pid": "c1-default" | { "loop1": {...}, "loop2": {...} },
//                     "feedforward": { "source": "synthesized" | "paper-ff" | "custom",
//                                      "method": "tustin", "printed_reading": "single-minus",
//                                      "f11": {"num": [...], "den": [...], "ts": 1}, ...,
//                                      "enable": {"f11": true, "f12": false, ...} },
//                     "ci": { "loop1": {"delta": 0.4, "w": 1}, "loop2": {...} } },
//     "weights":    "reconstructed" | "equal" | [w1, ..., w8]
//   }
struct RunConfig {
  std::string scenario_name{presets::kScenario};
  Scenario scenario = presets::Pid2018Default();
  std::string plant_name{presets::kPlant};
  PlantModel plant = presets::Pid2018Surrogate();
  ControllerKind kind = ControllerKind::kC1;
  ControllerConfig controller = presets::DefaultController(plant);
  FeedforwardSource ff_source = FeedforwardSource::kSynthesized;
  Discretization ff_method = Discretization::kTustin;
  bool printed_double_minus = false;
  IndexWeights weights = IndexWeights::Reconstructed();
};

// Presets only: default scenario, surrogate plant, C1 gains, synthesized
// feedforward, conditional integrator table values, reconstructed weights.
RunConfig DefaultRunConfig();

// Throws ConfigError with a line/column (syntax) or field path (schema)
// diagnostic.
RunConfig ParseRunConfig(std::string_view json_text);
RunConfig LoadRunConfig(const std::filesystem::path& path);

// Re-samples every block at `ts`; rebuilds synthesized feedforward.
void SetSamplingPeriod(RunConfig& cfg, double ts);
void SetHorizon(RunConfig& cfg, double horizon);
// Rebuilds the feedforward bank from `cfg.ff_source`, keeping the enable
// flags.
void RebuildFeedforward(RunConfig& cfg);

// Full JSON form of a configuration (re-loadable by ParseRunConfig).
std::string DumpRunConfig(const RunConfig& cfg);

std::string TransferFunctionJson(const RationalTF& tf);
std::string FilterJson(const DiscreteFilter& f);

// Parses "w1,...,w8", "equal" or "reconstructed".
IndexWeights ParseWeights(std::string_view text);

}  // namespace rcsim

#endif  // RCSIM_CONFIG_H_
