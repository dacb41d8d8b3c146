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

#include <cmath>

#include "doctest.h"
#include "rcsim/errors.h"
#include "rcsim/presets.h"

using namespace rcsim;

TEST_CASE("valve schedule end points and clamping") {
  const GainSchedule av = presets::AvSchedule();
  CHECK(av(-38.79) == 2.0981);
  CHECK(av(51.21) == 0.6997);
  CHECK(av(100.0) == 0.6997);
  CHECK(av(-100.0) == 2.0981);
  CHECK(av(10.0) == 1.0);
}

TEST_CASE("compressor schedule interpolates between breakpoints") {
  const GainSchedule n = presets::NSchedule();
  CHECK(n(0.0) == doctest::Approx(1.12115).epsilon(1e-12));
  CHECK(n(-6.45) == 1.2895);
  CHECK(n(13.55) == 0.8569);
}

TEST_CASE("schedules are continuous") {
  for (const GainSchedule& g : {presets::AvSchedule(), presets::NSchedule()}) {
    const double lo = g.breakpoints().front() - 5.0;
    const double hi = g.breakpoints().back() + 5.0;
    double max_jump = 0.0;
    double prev = g(lo);
    for (int i = 1; i <= 10000; ++i) {
      const double v = g(lo + (hi - lo) * i / 10000.0);
      max_jump = std::max(max_jump, std::abs(v - prev));
      prev = v;
    }
    CHECK(max_jump < 1e-3);
  }
}

TEST_CASE("invalid schedules are rejected") {
  CHECK_THROWS_AS(GainSchedule({0.0, 0.0}, {1.0, 2.0}), ConfigError);
  CHECK_THROWS_AS(GainSchedule({0.0, 1.0}, {1.0}), ConfigError);
  CHECK_THROWS_AS(GainSchedule({}, {}), ConfigError);
}

TEST_CASE("operating point is an equilibrium") {
  const PlantModel m = presets::Pid2018Surrogate();
  Plant p(m);
  for (int k = 0; k < 1200; ++k) {
    const PlantOutputs y = p.Step(m.op.av0, m.op.n0, m.op.te_sec_in0, m.op.tc_sec_in0);
    REQUIRE(std::abs(y.te_sec_out - m.op.te_sec_out0) <= 1e-12);
    REQUIRE(std::abs(y.tsh - m.op.tsh0) <= 1e-12);
  }
}

TEST_CASE("valve step settles on the scheduled static gain") {
  const PlantModel m = presets::Pid2018Surrogate();
  Plant p(m);
  PlantOutputs y{};
  for (int k = 0; k < 2000; ++k)
    y = p.Step(m.op.av0 + 10.0, m.op.n0, m.op.te_sec_in0, m.op.tc_sec_in0);
  CHECK(y.te_sec_out ==
        doctest::Approx(-22.15 + 10.0 * 1.0 * (-0.01147 / 0.6216)).epsilon(1e-9));
  CHECK(y.tsh == doctest::Approx(14.65));
}

TEST_CASE("compressor step is scaled by the interpolated schedule") {
  const PlantModel m = presets::Pid2018Surrogate();
  Plant p(m);
  PlantOutputs y{};
  for (int k = 0; k < 3000; ++k)
    y = p.Step(m.op.av0, m.op.n0 + 1.0, m.op.te_sec_in0, m.op.tc_sec_in0);
  const double lut = presets::NSchedule()(1.0);
  CHECK(y.tsh == doctest::Approx(14.65 + lut * 0.07604 / 0.4441).epsilon(1e-9));
}

TEST_CASE("evaporator inlet step with frozen inputs") {
  const PlantModel m = presets::Pid2018Surrogate();
  Plant p(m);
  PlantOutputs y{};
  for (int k = 0; k < 600; ++k)
    y = p.Step(m.op.av0, m.op.n0, m.op.te_sec_in0 - 3.0, m.op.tc_sec_in0);
  CHECK(y.te_sec_out - m.op.te_sec_out0 == doctest::Approx(-3.0 * 44.84 / 45.58).epsilon(1e-6));
  CHECK(y.tsh - m.op.tsh0 == doctest::Approx(-3.0 * 4.903 / 7.268).epsilon(1e-6));
}

TEST_CASE("inputs are saturated before they reach the plant") {
  const PlantModel m = presets::Pid2018Surrogate();
  Plant p(m);
  p.Step(500.0, -20.0, m.op.te_sec_in0, m.op.tc_sec_in0);
  CHECK(p.applied().av == m.limits.av_max);
  CHECK(p.applied().n == m.limits.n_min);
  const AppliedInputs s = p.Saturate(50.0, 40.0);
  CHECK(s.av == 50.0);
  CHECK(s.n == 40.0);
}

TEST_CASE("plant validation") {
  PlantModel m = presets::Pid2018Surrogate();
  m.g11 = RationalTF({1.0}, {1.0, -1.0});
  CHECK_THROWS_AS(m.Validate(), ConfigError);
  m = presets::Pid2018Surrogate();
  m.op.av0 = 5.0;
  CHECK_THROWS_AS(m.Validate(), ConfigError);
  m = presets::Pid2018Surrogate();
  m.ts = 0.0;
  CHECK_THROWS_AS(m.Validate(), ConfigError);
}

TEST_CASE("identical input sequences give identical outputs") {
  const PlantModel m = presets::Pid2018Surrogate();
  Plant c(m), d(m);
  for (int k = 0; k < 300; ++k) {
    const PlantOutputs yc = c.Step(60.0, 40.0, -21.0, 29.0);
    const PlantOutputs yd = d.Step(60.0, 40.0, -21.0, 29.0);
    REQUIRE(yc.te_sec_out == yd.te_sec_out);
    REQUIRE(yc.tsh == yd.tsh);
  }
}
