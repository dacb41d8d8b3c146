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

#include "rcsim/lti.h"

#include <cmath>
#include <random>

#include "doctest.h"
#include "rcsim/errors.h"
#include "rcsim/presets.h"

using namespace rcsim;

TEST_CASE("rational tf normalises to a monic denominator") {
  RationalTF tf({2.0, 4.0}, {2.0, 6.0, 2.0});
  CHECK(tf.den() == Coeffs{1.0, 3.0, 1.0});
  CHECK(tf.num() == Coeffs{1.0, 2.0});
  CHECK(tf.dc_gain() == doctest::Approx(2.0));
  CHECK_THROWS_AS(RationalTF({1.0}, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(RationalTF({1.0}, {1.0, 0.0}).dc_gain(), NumericError);
}

TEST_CASE("first-order canonical realisation") {
  const StateSpace ss = TfToSs(RationalTF({1.0}, {1.0, 1.0}));
  REQUIRE(ss.order() == 1);
  CHECK(ss.a(0, 0) == -1.0);
  CHECK(ss.b(0, 0) == 1.0);
  CHECK(ss.c(0, 0) == 1.0);
  CHECK(ss.d(0, 0) == 0.0);
}

TEST_CASE("static gain realisation has no states") {
  const StateSpace ss = TfToSs(RationalTF::Gain(3.5));
  CHECK(ss.order() == 0);
  CHECK(ss.d(0, 0) == 3.5);
}

TEST_CASE("realisation of G11 keeps the DC gain") {
  const RationalTF g = presets::G11();
  const StateSpace ss = TfToSs(g);
  CHECK(ss.order() == 2);
  CHECK(ss.FrequencyResponse(0.0).real() == doctest::Approx(-0.01147 / 0.6216).epsilon(1e-12));
}

TEST_CASE("realisation matches the transfer function on random frequencies") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    Coeffs den{1.0, u(rng), u(rng), u(rng)};
    Coeffs num{u(rng) - 2.5, u(rng), u(rng), u(rng)};
    RationalTF tf(num, den);
    StateSpace ss = TfToSs(tf);
    const std::complex<double> s(0.0, u(rng));
    CHECK(std::abs(ss.FrequencyResponse(s) - tf(s)) < 1e-9 * std::max(1.0, std::abs(tf(s))));
  }
}

TEST_CASE("improper tf cannot be realised") {
  CHECK_THROWS_AS(TfToSs(RationalTF({1.0, 0.0}, {1.0})), std::invalid_argument);
}

TEST_CASE("closed-form zoh of a first-order lag") {
  const DiscreteFilter f = C2d(RationalTF({1.0}, {1.0, 1.0}), 1.0, Discretization::kZoh);
  REQUIRE(f.den().size() == 2);
  CHECK(f.den()[1] == doctest::Approx(-std::exp(-1.0)).epsilon(1e-14));
  CHECK(f.num()[0] == doctest::Approx(0.0));
  CHECK(f.num()[1] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("static gain discretises to itself") {
  for (auto m : {Discretization::kZoh, Discretization::kTustin}) {
    for (double ts : {0.1, 1.0, 7.0}) {
      DiscreteFilter f = C2d(RationalTF::Gain(-2.5), ts, m);
      CHECK(f.Step(4.0) == doctest::Approx(-10.0));
      CHECK(f.Step(1.0) == doctest::Approx(-2.5));
    }
  }
}

TEST_CASE("tustin of 1/(s+1) matches the bilinear map") {
  const double ts = 0.5;
  const DiscreteFilter f = C2d(RationalTF({1.0}, {1.0, 1.0}), ts, Discretization::kTustin);
  const double k = 2.0 / ts;
  CHECK(f.num()[0] == doctest::Approx(1.0 / (k + 1.0)));
  CHECK(f.num()[1] == doctest::Approx(1.0 / (k + 1.0)));
  CHECK(f.den()[1] == doctest::Approx((1.0 - k) / (k + 1.0)));
}

TEST_CASE("both methods preserve DC gain of stable plants") {
  for (auto tf : {presets::G11(), presets::G22(), presets::D11(), presets::D21(), presets::D12(),
                  presets::D22()}) {
    for (auto m : {Discretization::kZoh, Discretization::kTustin}) {
      const DiscreteFilter f = C2d(tf, 1.0, m);
      CHECK(f.dc_gain() == doctest::Approx(tf.dc_gain()).epsilon(1e-9));
      CHECK(f.is_stable());
    }
  }
}

TEST_CASE("discrete filter basics") {
  DiscreteFilter id({1.0}, {1.0}, 1.0);
  CHECK(id.Step(5.0) == 5.0);

  DiscreteFilter f({0.1268, -0.02234, -0.09628}, {1.0, -1.94, 0.9405}, 1.0);
  for (int i = 0; i < 50; ++i) CHECK(f.Step(0.0) == 0.0);
  double y = 0.0;
  for (int i = 0; i < 5000; ++i) y = f.Step(1.0);
  const double dc = (0.1268 - 0.02234 - 0.09628) / (1.0 - 1.94 + 0.9405);
  CHECK(y == doctest::Approx(dc).epsilon(1e-9));
  CHECK(f.dc_gain() == doctest::Approx(dc).epsilon(1e-12));
}

TEST_CASE("peek does not advance the state") {
  DiscreteFilter f({0.5, 0.2}, {1.0, -0.3}, 1.0);
  f.Step(1.0);
  const double p = f.Peek(2.0);
  CHECK(f.Peek(2.0) == p);
  CHECK(f.Step(2.0) == p);
  f.Reset();
  CHECK(f.Step(0.0) == 0.0);
}

TEST_CASE("non-causal or invalid filters are rejected") {
  CHECK_THROWS(DiscreteFilter({1.0, 0.0, 0.0}, {1.0, 0.5}, 1.0));
  CHECK_THROWS(DiscreteFilter({1.0}, {1.0}, 0.0));
  CHECK_THROWS(DiscreteFilter({1.0}, {0.0}, 1.0));
}

TEST_CASE("step response final values") {
  const StepResponse g22 = ComputeStepResponse(presets::G22(), 1.0, 600.0, 5.0);
  CHECK(g22.time.size() == 601);
  CHECK(g22.value.front() == 0.0);
  CHECK(g22.value.back() == doctest::Approx(5.0 * 0.07604 / 0.4441).epsilon(1e-3));

  const StepResponse d11 = ComputeStepResponse(presets::D11(), 1.0, 10.0, -3.0);
  CHECK(d11.value.back() == doctest::Approx(-3.0 * 44.84 / 45.58).epsilon(1e-9));

  const StepResponse zero = ComputeStepResponse(presets::G11(), 1.0, 100.0, 0.0);
  for (double v : zero.value) CHECK(v == 0.0);
}

TEST_CASE("discretisation method names") {
  CHECK(ParseDiscretization("zoh") == Discretization::kZoh);
  CHECK(ParseDiscretization("tustin") == Discretization::kTustin);
  CHECK(ToString(Discretization::kTustin) == "tustin");
  CHECK_THROWS_AS(ParseDiscretization("euler"), ConfigError);
}

TEST_CASE("characteristic polynomial of a companion matrix") {
  Eigen::MatrixXd a(2, 2);
  a << 0.0, 1.0, -2.0, -3.0;
  const Coeffs p = CharacteristicPolynomial(a);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(3.0));
  CHECK(p[2] == doctest::Approx(2.0));
}
