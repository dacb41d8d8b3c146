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

#include "rcsim/sysid.h"

#include <chrono>
#include <cmath>

#include "doctest.h"
#include "rcsim/errors.h"
#include "rcsim/presets.h"

using namespace rcsim;

namespace {

StepExperiment Generate(const RationalTF& tf, double horizon, double amplitude) {
  const StepResponse r = ComputeStepResponse(tf, 1.0, horizon, amplitude);
  return StepExperiment{1.0, amplitude, r.value};
}

void CheckCoefficients(const RationalTF& fit, const RationalTF& truth, double tol) {
  REQUIRE(fit.num().size() == truth.num().size());
  REQUIRE(fit.den().size() == truth.den().size());
  for (std::size_t i = 0; i < truth.num().size(); ++i)
    CHECK(fit.num()[i] == doctest::Approx(truth.num()[i]).epsilon(tol));
  for (std::size_t i = 0; i < truth.den().size(); ++i)
    CHECK(fit.den()[i] == doctest::Approx(truth.den()[i]).epsilon(tol));
}

double MaxResponseMismatch(const RationalTF& a, const RationalTF& b, double horizon) {
  const StepResponse ra = ComputeStepResponse(a, 1.0, horizon, 1.0);
  const StepResponse rb = ComputeStepResponse(b, 1.0, horizon, 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < ra.value.size(); ++i)
    worst = std::max(worst, std::abs(ra.value[i] - rb.value[i]));
  return worst / std::abs(rb.value.back());
}

}  // namespace

TEST_CASE("second-order round trip on the valve channel") {
  const FitResult r = FitSecondOrder(Generate(presets::G11(), 300.0, 10.0));
  CheckCoefficients(r.model, presets::G11(), 1e-2);
  CHECK(r.max_deviation < 1e-3);
}

TEST_CASE("second-order round trip on the compressor channel") {
  const FitResult r = FitSecondOrder(Generate(presets::G22(), 300.0, 10.0));
  CheckCoefficients(r.model, presets::G22(), 1e-2);
  CHECK(r.max_deviation < 1e-3);
}

TEST_CASE("first-order round trip on the condenser paths") {
  const FitResult d12 = FitFirstOrder(Generate(presets::D12(), 300.0, 1.0));
  CheckCoefficients(d12.model, presets::D12(), 1e-2);
  const FitResult d22 = FitFirstOrder(Generate(presets::D22(), 300.0, 1.0));
  CHECK(d22.model.dc_gain() == doctest::Approx(0.572 / 0.04099).epsilon(5e-3));
}

TEST_CASE("second-order fit of first-order data matches the response") {
  const RationalTF truth({2.0}, {1.0, 0.1});
  const FitResult r = FitSecondOrder(Generate(truth, 200.0, 1.0));
  CHECK(r.max_deviation < 1e-3);
  CHECK(MaxResponseMismatch(r.model, truth, 200.0) < 1e-3);
}

TEST_CASE("fast disturbance paths are matched in response") {
  for (const RationalTF& truth : {presets::D11(), presets::D21()}) {
    const FitResult r = truth.den_degree() == 2 ? FitSecondOrder(Generate(truth, 400.0, 1.0))
                                                : FitFirstOrder(Generate(truth, 400.0, 1.0));
    CHECK(r.max_deviation < 1e-3);
    CHECK(r.model.dc_gain() == doctest::Approx(truth.dc_gain()).epsilon(1e-3));
  }
}

TEST_CASE("zero response gives a zero-gain model with a warning") {
  StepExperiment e{1.0, 1.0, std::vector<double>(50, 0.0)};
  const FitResult r = FitSecondOrder(e);
  CHECK(poly::IsZero(r.model.num()));
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("invalid experiments") {
  CHECK_THROWS_AS(FitFirstOrder(StepExperiment{1.0, 1.0, {0.0, 1.0}}), ConfigError);
  CHECK_THROWS_AS(FitFirstOrder(StepExperiment{1.0, 0.0, std::vector<double>(20, 0.0)}),
                  ConfigError);
  std::vector<double> offset(20, 1.0);
  CHECK_THROWS_AS(FitFirstOrder(StepExperiment{1.0, 1.0, offset}), ConfigError);
  // Still rising at the end of the record.
  const StepExperiment unsettled = Generate(presets::G11(), 30.0, 1.0);
  CHECK_THROWS_AS(FitSecondOrder(unsettled), ConfigError);
}

TEST_CASE("fits are fast enough") {
  const auto t0 = std::chrono::steady_clock::now();
  FitSecondOrder(Generate(presets::G11(), 300.0, 10.0));
  FitSecondOrder(Generate(presets::G22(), 300.0, 10.0));
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(s < 10.0);
}
