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

#ifndef RCSIM_OPTIMIZE_H_
#define RCSIM_OPTIMIZE_H_

#include <functional>
#include <vector>

namespace rcsim {

struct NelderMeadOptions {
  int max_iterations = 4000;
  // Stop once every vertex lies within x_tolerance (max-norm) of the best.
  double x_tolerance = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;
};

// Downhill simplex with the standard reflection/expansion/contraction/shrink
// coefficients (1, 2, 1/2, 1/2). `step` sets the initial simplex edge per
// coordinate.
NelderMeadResult NelderMead(const std::function<double(const std::vector<double>&)>& f,
                            std::vector<double> x0, const std::vector<double>& step,
                            const NelderMeadOptions& options = {});

}  // namespace rcsim

#endif  // RCSIM_OPTIMIZE_H_
