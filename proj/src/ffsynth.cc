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
#include <complex>
#include <limits>
#include <sstream>

#include "rcsim/errors.h"

namespace rcsim {
namespace {

using Root = std::complex<double>;

std::string FormatRoots(const std::vector<Root>& roots) {
  std::ostringstream os;
  os.precision(6);
  os << "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    os << (i ? ", " : "") << roots[i].real();
    if (roots[i].imag() != 0.0) os << (roots[i].imag() > 0 ? "+" : "") << roots[i].imag() << "j";
  }
  os << "}";
  return os.str();
}

// Returns the possibly improper ratio -d/g after cancellation.
RationalTF DivideNegateUnchecked(const RationalTF& d, const RationalTF& g, double tolerance) {
  if (poly::IsZero(g.num()))
    throw std::invalid_argument("feedforward synthesis: plant numerator is zero");
  if (poly::IsZero(d.num())) return RationalTF({0.0}, {1.0});

  const Coeffs num = poly::Scale(poly::Multiply(d.num(), g.den()), -1.0);
  const Coeffs den = poly::Multiply(d.den(), g.num());

  std::vector<Root> zeros = poly::Roots(num);
  std::vector<Root> poles = poly::Roots(den);
  double scale = 1.0;
  for (const auto& r : zeros) scale = std::max(scale, std::abs(r));
  for (const auto& r : poles) scale = std::max(scale, std::abs(r));

  bool cancelled = false;
  for (;;) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < zeros.size(); ++i)
      for (std::size_t j = 0; j < poles.size(); ++j) {
        const double dist = std::abs(zeros[i] - poles[j]);
        if (dist < best) {
          best = dist;
          bi = i;
          bj = j;
        }
      }
    if (!(best / scale < tolerance)) break;
    zeros.erase(zeros.begin() + static_cast<std::ptrdiff_t>(bi));
    poles.erase(poles.begin() + static_cast<std::ptrdiff_t>(bj));
    cancelled = true;
  }
  if (!cancelled) return RationalTF(num, den);
  return RationalTF(poly::Scale(poly::FromRoots(zeros), num.front()),
                    poly::Scale(poly::FromRoots(poles), den.front()));
}

void ThrowIfImproper(const RationalTF& ff) {
  if (ff.is_proper()) return;
  const int excess = ff.num_degree() - ff.den_degree();
  std::ostringstream msg;
  msg << "feedforward -D/G is improper: numerator degree exceeds denominator degree by "
      << excess << " (no causal approximation of the plant inverse is attempted)";
  throw InfeasibleError(msg.str(), excess);
}

}  // namespace

RationalTF RationalDivideNegate(const RationalTF& d, const RationalTF& g, double tolerance) {
  RationalTF ff = DivideNegateUnchecked(d, g, tolerance);
  ThrowIfImproper(ff);
  return ff;
}

SynthesisResult SynthesizeFeedforward(const RationalTF& d, const RationalTF& g, double ts,
                                      Discretization method) {
  SynthesisResult result{DivideNegateUnchecked(d, g, kCancellationTolerance), std::nullopt,
                         false, false, {}};
  const RationalTF& ff = result.continuous;
  result.proper = ff.is_proper();
  result.stable = ff.is_stable();
  result.notes.push_back("poles " + FormatRoots(ff.poles()));
  if (!poly::IsZero(ff.num())) result.notes.push_back("zeros " + FormatRoots(ff.zeros()));
  if (!result.proper) {
    try {
      ThrowIfImproper(ff);
    } catch (const InfeasibleError& e) {
      result.notes.emplace_back(e.what());
    }
  }
  if (!result.stable) {
    const auto g_zeros = g.zeros();
    std::vector<Root> rhp;
    std::copy_if(g_zeros.begin(), g_zeros.end(), std::back_inserter(rhp),
                 [](const Root& z) { return z.real() >= 0.0; });
    result.notes.push_back("unstable compensator: plant zeros in the closed right half-plane " +
                           FormatRoots(rhp) + " become compensator poles");
  }
  if (result.proper && result.stable) result.discrete = C2d(ff, ts, method);
  return result;
}

FilterComparison CompareFilters(const DiscreteFilter& synthesized,
                                const DiscreteFilter& reference) {
  FilterComparison c{};
  if (synthesized.order() == reference.order()) {
    double delta = 0.0;
    for (std::size_t i = 0; i < synthesized.num().size(); ++i) {
      delta = std::max(delta, std::abs(synthesized.num()[i] - reference.num()[i]));
      delta = std::max(delta, std::abs(synthesized.den()[i] - reference.den()[i]));
    }
    c.max_abs_coeff_delta = delta;
  } else {
    c.max_abs_coeff_delta = std::numeric_limits<double>::quiet_NaN();
  }
  c.dc_synthesized = synthesized.dc_gain();
  c.dc_reference = reference.dc_gain();
  c.dc_ratio = c.dc_synthesized / c.dc_reference;
  return c;
}

}  // namespace rcsim
