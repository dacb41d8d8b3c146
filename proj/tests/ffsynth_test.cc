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

#include "rcsim/ffsynth.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "rcsim/errors.h"
#include "rcsim/presets.h"

using namespace rcsim;

namespace {

struct Pair {
  const char* name;
  RationalTF d;
  RationalTF g;
};

std::vector<Pair> Pairs() {
  return {{"D11/G11", presets::D11(), presets::G11()},
          {"D21/G22", presets::D21(), presets::G22()},
          {"D12/G11", presets::D12(), presets::G11()},
          {"D22/G22", presets::D22(), presets::G22()}};
}

}  // namespace

TEST_CASE("self-cancellation gives minus one") {
  const RationalTF g = presets::G11();
  const RationalTF ff = RationalDivideNegate(g, g);
  CHECK(ff.num_degree() == 0);
  CHECK(ff.den_degree() == 0);
  CHECK(ff.dc_gain() == doctest::Approx(-1.0));
}

TEST_CASE("evaporator-inlet compensator for the valve loop") {
  const RationalTF ff = RationalDivideNegate(presets::D11(), presets::G11());
  CHECK(ff.num_degree() == 2);
  CHECK(ff.den_degree() == 2);
  CHECK(ff.dc_gain() == doctest::Approx((44.84 * 0.6216) / (45.58 * 0.01147)).epsilon(1e-12));
}

TEST_CASE("right-half-plane plant zero gives an unstable compensator") {
  const RationalTF g({1.0, -1.0}, {1.0, 3.0, 2.0});
  const SynthesisResult r = SynthesizeFeedforward(presets::D12(), g, 1.0, Discretization::kTustin);
  CHECK_FALSE(r.stable);
  CHECK_FALSE(r.discrete.has_value());
}

TEST_CASE("zero disturbance path gives a zero compensator") {
  const SynthesisResult r =
      SynthesizeFeedforward(RationalTF({0.0}, {1.0, 2.0}), presets::G22(), 1.0,
                            Discretization::kTustin);
  REQUIRE(r.discrete.has_value());
  DiscreteFilter f = *r.discrete;
  for (int k = 0; k < 20; ++k) CHECK(f.Step(1.0) == 0.0);
}

TEST_CASE("improper ratios are infeasible with a degree diagnostic") {
  const RationalTF d({1.0}, {1.0, 1.0});
  const RationalTF g({1.0}, {1.0, 2.0, 1.0, 4.0});
  try {
    RationalDivideNegate(d, g);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.degree_excess() == 2);
    CHECK(std::string(e.what()).find("degree") != std::string::npos);
  }
  const SynthesisResult r = SynthesizeFeedforward(d, g, 1.0, Discretization::kTustin);
  CHECK_FALSE(r.proper);
  CHECK_FALSE(r.discrete.has_value());
}

TEST_CASE("zero plant numerator is rejected") {
  CHECK_THROWS_AS(RationalDivideNegate(presets::D11(), RationalTF({0.0}, {1.0, 1.0})),
                  std::invalid_argument);
}

TEST_CASE("all surrogate pairs are realisable and stable") {
  for (const auto& p : Pairs()) {
    CAPTURE(p.name);
    for (auto m : {Discretization::kTustin, Discretization::kZoh}) {
      const SynthesisResult r = SynthesizeFeedforward(p.d, p.g, 1.0, m);
      CHECK(r.proper);
      CHECK(r.stable);
      REQUIRE(r.discrete.has_value());
      CHECK(r.discrete->is_stable());
      CHECK(r.discrete->dc_gain() == doctest::Approx(-p.d.dc_gain() / p.g.dc_gain()).epsilon(1e-9));
    }
  }
}

TEST_CASE("tustin compensation cancels the disturbance sample by sample") {
  for (const auto& p : Pairs()) {
    CAPTURE(p.name);
    const SynthesisResult r = SynthesizeFeedforward(p.d, p.g, 1.0, Discretization::kTustin);
    DiscreteFilter ff = *r.discrete;
    DiscreteFilter g = C2d(p.g, 1.0, Discretization::kTustin);
    DiscreteFilter d = C2d(p.d, 1.0, Discretization::kTustin);
    const double step = -3.0;
    double worst = 0.0;
    for (int k = 0; k < 600; ++k) {
      const double y = g.Step(ff.Step(step)) + d.Step(step);
      worst = std::max(worst, std::abs(y));
    }
    CHECK(worst < 1e-8 * std::abs(step));
  }
}

TEST_CASE("cancellation of shared roots") {
  // d carries the common factor (s + 2): -d/g = -3 (s + 1) / ((s + 5)(s + 2)).
  const RationalTF d({3.0, 6.0}, poly::Multiply(Coeffs{1.0, 2.0}, Coeffs{1.0, 5.0}));
  const RationalTF g({1.0, 2.0}, Coeffs{1.0, 1.0});
  const RationalTF ff = RationalDivideNegate(d, g);
  CHECK(ff.num_degree() == 1);
  CHECK(ff.den_degree() == 2);
  CHECK(ff.dc_gain() == doctest::Approx(-3.0 / 10.0));
}

TEST_CASE("random stable minimum-phase pairs give proper stable compensators") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> root(0.05, 10.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::complex<double> gz[] = {-root(rng)};
    const std::complex<double> gp[] = {-root(rng), -root(rng)};
    const std::complex<double> dp[] = {-root(rng)};
    const RationalTF g(poly::FromRoots(gz), poly::FromRoots(gp));
    const RationalTF d({root(rng)}, poly::FromRoots(dp));
    const SynthesisResult r = SynthesizeFeedforward(d, g, 1.0, Discretization::kTustin);
    CHECK(r.proper);
    CHECK(r.stable);
    const std::complex<double> s(0.0, 0.3);
    const std::complex<double> expected = -d(s) / g(s);
    CHECK(std::abs(r.continuous(s) - expected) < 1e-9 * std::abs(expected));
  }
}

TEST_CASE("printed compensators against the synthesised ones") {
  const auto printed = presets::PrintedFilters();
  const FeedforwardBank synth = presets::SynthesizedFeedforward(presets::Pid2018Surrogate());
  // Agreement to the rounding of the printed digits (four significant).
  auto relative_delta = [](const DiscreteFilter& a, const DiscreteFilter& b, double scale) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.num().size(); ++i)
      worst = std::max(worst, std::abs(scale * a.num()[i] - b.num()[i]) / std::abs(b.num()[i]));
    for (std::size_t i = 1; i < a.den().size(); ++i)
      worst = std::max(worst, std::abs(a.den()[i] - b.den()[i]) / std::abs(b.den()[i]));
    return worst;
  };
  CHECK(printed[0].path == "f12");
  CHECK(relative_delta(synth.f12, printed[0].filter, 1.0) < 2e-3);
  CHECK(printed[2].path == "f11");
  CHECK(relative_delta(synth.f11, printed[2].filter, 1.0) < 2e-3);
  CHECK(printed[3].path == "f21");
  CHECK(relative_delta(synth.f21, printed[3].filter, 1.0) < 2e-3);
  // The printed condenser-path N compensator is the synthesised one scaled by 1/10.
  CHECK(printed[1].path == "f22");
  CHECK(relative_delta(synth.f22, printed[1].filter, 0.1) < 2e-3);
  CHECK(relative_delta(synth.f22, printed[1].filter, 1.0) > 5.0);

  // Same-order coefficient rounding still moves the DC gain of the f12 slot
  // by a third: its denominator sums to about 5e-4.
  const FilterComparison f12 = CompareFilters(synth.f12, printed[0].filter);
  CHECK(f12.max_abs_coeff_delta < 1e-3);
  CHECK(std::abs(f12.dc_ratio - 1.0) > 0.1);
}

TEST_CASE("both readings of the ambiguous printed denominator") {
  const auto single = presets::PrintedFilters(presets::PrintedReading::kSingleMinus);
  const auto dbl = presets::PrintedFilters(presets::PrintedReading::kDoubleMinus);
  CHECK(single[3].filter.is_stable());
  CHECK_FALSE(dbl[3].filter.is_stable());
}
