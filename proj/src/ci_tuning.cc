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

#include "rcsim/ci_tuning.h"

#include <future>

#include "rcsim/errors.h"

namespace rcsim {
namespace {

std::vector<CiGridCell> Scan(int loop, const Scenario& scenario, const PlantModel& plant,
                             const ControllerConfig& base, const SimTrace& baseline,
                             std::span<const double> deltas, std::span<const double> ws,
                             const IndexWeights& weights) {
  std::vector<std::future<CiGridCell>> jobs;
  for (double delta : deltas) {
    for (double w : ws) {
      jobs.push_back(std::async(std::launch::async, [=, &scenario, &plant, &base, &baseline,
                                                     &weights] {
        ControllerConfig cfg = base;
        ConditionalIntegratorConfig& active = loop == 1 ? *cfg.ci1 : *cfg.ci2;
        ConditionalIntegratorConfig& idle = loop == 1 ? *cfg.ci2 : *cfg.ci1;
        active.delta = delta;
        active.w = w;
        idle.w = 0.0;
        const SimTrace trace = RunScenario(scenario, plant, ControllerKind::kC3, cfg);
        return CiGridCell{delta, w, RelativeReport(trace, baseline, scenario.windows, weights).j};
      }));
    }
  }
  std::vector<CiGridCell> cells;
  cells.reserve(jobs.size());
  for (auto& job : jobs) cells.push_back(job.get());
  return cells;
}

const CiGridCell& Best(const std::vector<CiGridCell>& cells) {
  const CiGridCell* best = &cells.front();
  for (const auto& c : cells) {
    if (c.j < best->j || (c.j == best->j && (c.w < best->w || (c.w == best->w && c.delta < best->delta))))
      best = &c;
  }
  return *best;
}

}  // namespace

CiGridResult GridSearchCi(const Scenario& scenario, const PlantModel& plant,
                          const ControllerConfig& base, std::span<const double> delta_grid,
                          std::span<const double> w_grid, const IndexWeights& weights) {
  if (delta_grid.empty() || w_grid.empty()) throw ConfigError("grid search needs nonempty grids");
  if (!base.ci1 || !base.ci2 || !base.feedforward)
    throw ConfigError("grid search needs a C3-capable base controller");
  const SimTrace baseline = RunScenario(scenario, plant, ControllerKind::kC2, base);

  CiGridResult result;
  result.surface1 = Scan(1, scenario, plant, base, baseline, delta_grid, w_grid, weights);
  result.surface2 = Scan(2, scenario, plant, base, baseline, delta_grid, w_grid, weights);
  const CiGridCell& b1 = Best(result.surface1);
  const CiGridCell& b2 = Best(result.surface2);
  result.best1 = *base.ci1;
  result.best1.delta = b1.delta;
  result.best1.w = b1.w;
  result.best2 = *base.ci2;
  result.best2.delta = b2.delta;
  result.best2.w = b2.w;
  result.j1 = b1.j;
  result.j2 = b2.j;
  return result;
}

}  // namespace rcsim
