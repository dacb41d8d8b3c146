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

#ifndef RCSIM_CI_TUNING_H_
#define RCSIM_CI_TUNING_H_

#include <span>
#include <vector>

#include "rcsim/metrics.h"

namespace rcsim {

struct CiGridCell {
  double delta;
  double w;
  double j;  // J(C3 with this cell, C2)
};

struct CiGridResult {
  ConditionalIntegratorConfig best1;
  ConditionalIntegratorConfig best2;
  double j1;
  double j2;
  std::vector<CiGridCell> surface1;  // row-major over (delta, w)
  std::vector<CiGridCell> surface2;
};

// Exhaustive search of J(C3(delta, w), C2) for each loop separately; while
// one loop is scanned the other loop's integrator has w = 0. Ties go to the
// smaller w, then the smaller delta. Cells run in parallel.
CiGridResult GridSearchCi(const Scenario& scenario, const PlantModel& plant,
                          const ControllerConfig& base, std::span<const double> delta_grid,
                          std::span<const double> w_grid, const IndexWeights& weights);

}  // namespace rcsim

#endif  // RCSIM_CI_TUNING_H_
