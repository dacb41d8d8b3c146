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

#ifndef RCSIM_METRICS_H_
#define RCSIM_METRICS_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcsim/sim.h"

namespace rcsim {

// Discrete index definitions (rectangular rule, samples with t0 <= t < t1):
//   IAE  = sum ts * |r_k - y_k|
//   ITAE = sum ts * (t_k - tc) * |r_k - y_k|   over tc <= t < tc + window
//   IAVU = sum |u_k - u_{k-1}|                 applied input, pairs inside the window
// Empty or out-of-trace windows throw ConfigError.
double Iae(const SimTrace& trace, int loop, double t0, double t1);
double Itae(const SimTrace& trace, int loop, double tc, double window);
double Iavu(const SimTrace& trace, int loop, double t0, double t1);

inline constexpr std::size_t kIndexCount = 8;
using IndexVector = std::array<double, kIndexCount>;

// Order: RIAE1, RIAE2, RITAE1..RITAE4, RIAVU1, RIAVU2.
std::array<std::string_view, kIndexCount> IndexLabels();

struct IndexWeights {
  IndexVector w{};

  static IndexWeights Equal();
  // Weights reconciling the three published comparison tables; produced by
  // CalibrateWeights(PublishedTables(), Prior()) and frozen here.
  static IndexWeights Reconstructed();
  // Starting point for the reconstruction: 1 for the error indices, 0.3 for
  // the control-effort indices.
  static IndexWeights Prior();

  void Validate() const;  // nonnegative, sum > 0
};

double CombinedIndex(const IndexVector& indices, const IndexWeights& weights);

struct IndexReport {
  IndexVector indices{};
  double j = 0.0;
  std::vector<std::string> notes;
};

// candidate / baseline per index, J = sum(w_i * idx_i) / sum(w_i). Throws
// NumericError naming the index when a baseline index is zero.
IndexReport RelativeReport(const SimTrace& candidate, const SimTrace& baseline,
                           const std::array<IndexWindow, 4>& windows,
                           const IndexWeights& weights);

// Aligned text table: one row per index plus J.
std::string FormatReportTable(const IndexReport& report, std::string_view candidate,
                              std::string_view baseline);
std::string FormatReportCsv(const IndexReport& report);

struct PublishedTable {
  std::string_view name;
  IndexVector indices;
  double j;
};

// Relative indices and J printed for C2 vs C1, C3 vs C2 and C3 vs C1.
std::span<const PublishedTable> PublishedTables();

struct WeightCalibration {
  IndexWeights weights;             // scaled so the first weight is 1
  std::vector<double> residuals;    // J(weights) - published J per table
  bool nonnegative;
};

// Weight vector nearest to `prior` (after normalising both to unit sum) that
// reproduces the published J of every table exactly.
WeightCalibration CalibrateWeights(std::span<const PublishedTable> tables,
                                   const IndexWeights& prior);

}  // namespace rcsim

#endif  // RCSIM_METRICS_H_
