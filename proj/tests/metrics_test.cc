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

#include "rcsim/metrics.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "rcsim/errors.h"
#include "rcsim/presets.h"

using namespace rcsim;

namespace {

SimTrace Constant(std::size_t n, double error, double u = 0.0) {
  SimTrace t;
  for (std::size_t k = 0; k < n; ++k) {
    t.time.push_back(static_cast<double>(k));
    t.r1.push_back(0.0);
    t.y1.push_back(-error);
    t.r2.push_back(1.0);
    t.y2.push_back(1.0 - error);
    t.av.push_back(u);
    t.n.push_back(u);
  }
  return t;
}

}  // namespace

TEST_CASE("IAE") {
  CHECK(Iae(Constant(20, 0.0), 1, 0.0, 20.0) == 0.0);
  CHECK(Iae(Constant(10, 1.0), 1, 0.0, 10.0) == 10.0);
  CHECK(Iae(Constant(10, -1.0), 2, 0.0, 10.0) == 10.0);
  CHECK(Iae(Constant(10, 1.0), 1, 2.0, 5.0) == 3.0);
  CHECK_THROWS_AS(Iae(Constant(10, 1.0), 1, 5.0, 5.0), ConfigError);
  CHECK_THROWS_AS(Iae(Constant(10, 1.0), 1, 20.0, 30.0), ConfigError);
  CHECK_THROWS_AS(Iae(Constant(10, 1.0), 3, 0.0, 10.0), ConfigError);
}

TEST_CASE("ITAE") {
  CHECK(Itae(Constant(10, 0.0), 1, 0.0, 3.0) == 0.0);
  CHECK(Itae(Constant(10, 1.0), 1, 0.0, 3.0) == 3.0);
  // Shifting tc changes which samples carry weight.
  SimTrace t = Constant(10, 0.0);
  t.y1[1] = -1.0;
  t.y1[2] = -1.0;
  CHECK(Itae(t, 1, 0.0, 3.0) == 3.0);
  CHECK(Itae(t, 1, 1.0, 3.0) == 1.0);
  CHECK(Itae(t, 1, 1.0, 3.0) < Itae(t, 1, 0.0, 3.0));
}

TEST_CASE("IAVU") {
  CHECK(Iavu(Constant(10, 0.0, 42.0), 1, 0.0, 10.0) == 0.0);
  SimTrace t = Constant(4, 0.0);
  t.av = {0.0, 1.0, 0.0, 1.0};
  CHECK(Iavu(t, 1, 0.0, 4.0) == 3.0);
  CHECK(Iavu(t, 2, 0.0, 4.0) == 0.0);
}

TEST_CASE("self comparison is all ones") {
  const PlantModel plant = presets::Pid2018Surrogate();
  const Scenario s = presets::Pid2018Default();
  const SimTrace a =
      RunScenario(s, plant, ControllerKind::kC2, presets::DefaultController(plant));
  for (const IndexWeights& w :
       {IndexWeights::Equal(), IndexWeights::Prior(), IndexWeights::Reconstructed()}) {
    const IndexReport r = RelativeReport(a, a, s.windows, w);
    for (double v : r.indices) CHECK(v == 1.0);
    CHECK(std::abs(r.j - 1.0) < 1e-12);
  }
}

TEST_CASE("zero baseline index is a numeric error") {
  const SimTrace zero = Constant(1201, 0.0);
  const SimTrace some = Constant(1201, 1.0);
  CHECK_THROWS_AS(RelativeReport(some, zero, presets::Pid2018Default().windows,
                                 IndexWeights::Equal()),
                  NumericError);
}

TEST_CASE("combined index arithmetic on the published tables") {
  const auto tables = PublishedTables();
  REQUIRE(tables.size() == 3);
  CHECK(CombinedIndex(tables[0].indices, IndexWeights::Equal()) ==
        doctest::Approx(0.86605).epsilon(1e-9));
  CHECK(CombinedIndex(tables[2].indices, IndexWeights::Prior()) ==
        doctest::Approx(0.5662).epsilon(5e-3));
}

TEST_CASE("calibrated weights reproduce every published J") {
  const auto tables = PublishedTables();
  const WeightCalibration cal = CalibrateWeights(tables, IndexWeights::Prior());
  CHECK(cal.nonnegative);
  CHECK(cal.weights.w[0] == 1.0);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    CHECK(std::abs(cal.residuals[i]) < 1e-12);
    CHECK(CombinedIndex(tables[i].indices, cal.weights) ==
          doctest::Approx(tables[i].j).epsilon(1e-12));
  }
  const IndexWeights frozen = IndexWeights::Reconstructed();
  for (std::size_t i = 0; i < kIndexCount; ++i)
    CHECK(frozen.w[i] == doctest::Approx(cal.weights.w[i]).epsilon(1e-14));
}

TEST_CASE("J is a weighted mean") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    IndexVector idx;
    IndexWeights w;
    for (std::size_t i = 0; i < kIndexCount; ++i) {
      idx[i] = u(rng);
      w.w[i] = u(rng);
    }
    const double j = CombinedIndex(idx, w);
    CHECK(j >= *std::min_element(idx.begin(), idx.end()) - 1e-12);
    CHECK(j <= *std::max_element(idx.begin(), idx.end()) + 1e-12);
    IndexWeights scaled = w;
    for (double& x : scaled.w) x *= 7.0;
    CHECK(CombinedIndex(idx, scaled) == doctest::Approx(j).epsilon(1e-12));
  }
}

TEST_CASE("weight validation") {
  IndexWeights w = IndexWeights::Equal();
  w.w[3] = -1.0;
  CHECK_THROWS_AS(w.Validate(), ConfigError);
  w.w.fill(0.0);
  CHECK_THROWS_AS(w.Validate(), ConfigError);
}

TEST_CASE("feedforward lowers the loop-1 error while the evaporator disturbance acts") {
  const PlantModel plant = presets::Pid2018Surrogate();
  const Scenario s = presets::Pid2018Default();
  const ControllerConfig cfg = presets::DefaultController(plant);
  const SimTrace c1 = RunScenario(s, plant, ControllerKind::kC1, cfg);
  const SimTrace c2 = RunScenario(s, plant, ControllerKind::kC2, cfg);
  CHECK(Iae(c2, 1, 540.0, 960.0) < Iae(c1, 1, 540.0, 960.0));
}

TEST_CASE("report formatting") {
  IndexReport r;
  r.indices.fill(1.0);
  r.j = 1.0;
  const std::string table = FormatReportTable(r, "C2", "C1");
  CHECK(table.find("RIAE1(C2,C1)") != std::string::npos);
  CHECK(table.find("J(C2,C1)") != std::string::npos);
  const std::string csv = FormatReportCsv(r);
  CHECK(csv.rfind("index,value\n", 0) == 0);
  CHECK(csv.find("J,1") != std::string::npos);
}
