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

#include "rcsim/optimize.h"

#include <cmath>

#include "doctest.h"

using namespace rcsim;

TEST_CASE("quadratic bowl") {
  auto f = [](const std::vector<double>& x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 10.0 * (x[1] + 2.0) * (x[1] + 2.0);
  };
  const NelderMeadResult r = NelderMead(f, {0.0, 0.0}, {0.5, 0.5});
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-6));
  CHECK(r.value < 1e-12);
}

TEST_CASE("rosenbrock valley") {
  auto f = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opt;
  opt.max_iterations = 20000;
  const NelderMeadResult r = NelderMead(f, {-1.2, 1.0}, {0.1, 0.1}, opt);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("iteration cap is honoured") {
  auto f = [](const std::vector<double>& x) { return std::abs(x[0]) + std::abs(x[1]); };
  NelderMeadOptions opt;
  opt.max_iterations = 5;
  const NelderMeadResult r = NelderMead(f, {3.0, 3.0}, {1.0, 1.0}, opt);
  CHECK(r.iterations <= 5);
  CHECK_FALSE(r.converged);
}

TEST_CASE("one-dimensional problem") {
  auto f = [](const std::vector<double>& x) { return std::cosh(x[0] - 0.25); };
  const NelderMeadResult r = NelderMead(f, {3.0}, {1.0});
  CHECK(r.x[0] == doctest::Approx(0.25).epsilon(1e-6));
}
