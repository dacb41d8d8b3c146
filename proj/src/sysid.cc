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

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "rcsim/errors.h"
#include "rcsim/optimize.h"

namespace rcsim {
namespace {

constexpr double kSettleTolerance = 0.01;
constexpr double kGoodFit = 1e-4;

Coeffs DenFromLogs(const std::vector<double>& logs) {
  Coeffs den{1.0};
  for (double l : logs) den.push_back(std::exp(l));
  return den;
}

// Least-squares numerator for a fixed denominator. Basis k is the step
// response of s^k / den.
struct Projection {
  Coeffs num;
  double sse;
};

Projection ProjectNumerator(const Coeffs& den, const std::vector<double>& y, double ts) {
  const int order = static_cast<int>(den.size()) - 1;
  const auto horizon = static_cast<double>(y.size() - 1) * ts;
  Eigen::MatrixXd basis(y.size(), order);
  for (int k = 0; k < order; ++k) {
    Coeffs num(static_cast<std::size_t>(k) + 1, 0.0);
    num[0] = 1.0;
    const auto r = ComputeStepResponse(RationalTF(num, den), ts, horizon, 1.0);
    for (std::size_t i = 0; i < y.size(); ++i) basis(static_cast<Eigen::Index>(i), order - 1 - k) = r.value[i];
  }
  const Eigen::Map<const Eigen::VectorXd> target(y.data(), static_cast<Eigen::Index>(y.size()));
  const Eigen::VectorXd coeffs = basis.colPivHouseholderQr().solve(target);
  const double sse = (basis * coeffs - target).squaredNorm();
  return {Coeffs(coeffs.data(), coeffs.data() + coeffs.size()), sse};
}

// Equation-error fit of y_k = -sum a_i y_{k-i} + sum b_i u_{k-i} (u = unit
// step from k = 0), mapped back to continuous time through the matrix
// logarithm of the zero-order-hold augmented matrix.
std::optional<Coeffs> ArxDenominator(const std::vector<double>& y, int order, double ts) {
  const int rows = static_cast<int>(y.size()) - 1;
  if (rows < 2 * order) return std::nullopt;
  Eigen::MatrixXd phi(rows, 2 * order);
  Eigen::VectorXd target(rows);
  for (int k = 1; k <= rows; ++k) {
    for (int i = 1; i <= order; ++i) {
      phi(k - 1, i - 1) = k - i >= 0 ? -y[static_cast<std::size_t>(k - i)] : 0.0;
      phi(k - 1, order + i - 1) = k - i >= 0 ? 1.0 : 0.0;
    }
    target(k - 1) = y[static_cast<std::size_t>(k)];
  }
  const Eigen::VectorXd theta = phi.completeOrthogonalDecomposition().solve(target);
  if (!theta.allFinite()) return std::nullopt;

  Coeffs den_z{1.0};
  Coeffs num_z{0.0};
  for (int i = 0; i < order; ++i) {
    den_z.push_back(theta(i));
    num_z.push_back(theta(order + i));
  }
  // Controllable canonical form of num_z / den_z, then log of [[A, B], [0, 1]].
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(order + 1, order + 1);
  for (int j = 0; j < order; ++j) aug(0, j) = -den_z[static_cast<std::size_t>(j) + 1];
  for (int i = 1; i < order; ++i) aug(i, i - 1) = 1.0;
  aug(0, order) = 1.0;
  aug(order, order) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> eig(aug.topLeftCorner(order, order), false);
  for (int i = 0; i < order; ++i) {
    const auto z = eig.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-14 && z.real() <= 0.0) return std::nullopt;
    if (std::abs(z) >= 1.0) return std::nullopt;
  }
  const Eigen::MatrixXd log_aug = aug.log() / ts;
  if (!log_aug.allFinite()) return std::nullopt;
  const Coeffs den = CharacteristicPolynomial(log_aug.topLeftCorner(order, order));
  for (std::size_t i = 1; i < den.size(); ++i)
    if (!(den[i] > 0.0)) return std::nullopt;
  return den;
}

Coeffs HeuristicDenominator(const std::vector<double>& y, double final_value, int order,
                            double ts) {
  double tau = ts;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (std::abs(y[k]) >= 0.632 * std::abs(final_value)) {
      tau = std::max(static_cast<double>(k) * ts, 0.5 * ts);
      break;
    }
  }
  if (order == 1) return {1.0, 1.0 / tau};
  // Dominant pole 1/tau plus a pole five times faster.
  return {1.0, 6.0 / tau, 5.0 / (tau * tau)};
}

FitResult Fit(const StepExperiment& exp, int order) {
  exp.Validate();
  std::vector<double> y(exp.response.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = exp.response[i] / exp.amplitude;

  std::vector<std::string> warnings;
  double peak = 0.0;
  for (double v : y) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) {
    warnings.emplace_back("zero response: fitted a zero-gain model");
    Coeffs den = order == 1 ? Coeffs{1.0, 1.0} : Coeffs{1.0, 2.0, 1.0};
    return {RationalTF({0.0}, den), 0.0, 0.0, true, warnings};
  }

  const std::size_t tail = std::max<std::size_t>(3, y.size() / 10);
  const double final_value = y.back();
  for (std::size_t i = y.size() - tail; i < y.size(); ++i) {
    if (std::abs(y[i] - final_value) > kSettleTolerance * std::abs(final_value) ||
        std::abs(final_value) < 1e-12 * peak)
      throw ConfigError("step response has not settled to within 1% over its last " +
                        std::to_string(tail) + " samples");
  }

  auto objective = [&](const std::vector<double>& logs) {
    return ProjectNumerator(DenFromLogs(logs), y, exp.ts).sse;
  };
  auto to_logs = [](const Coeffs& den) {
    std::vector<double> logs;
    for (std::size_t i = 1; i < den.size(); ++i) logs.push_back(std::log(den[i]));
    return logs;
  };

  std::vector<std::vector<double>> starts;
  if (auto arx = ArxDenominator(y, order, exp.ts)) starts.push_back(to_logs(*arx));
  starts.push_back(to_logs(HeuristicDenominator(y, final_value, order, exp.ts)));

  NelderMeadResult best{{}, std::numeric_limits<double>::infinity(), 0, false};
  auto polish = [&](const std::vector<double>& x0, double step) {
    const NelderMeadResult r =
        NelderMead(objective, x0, std::vector<double>(x0.size(), step));
    if (r.value < best.value) best = r;
  };
  for (const auto& s : starts) polish(s, 0.05);
  const double scale = final_value * final_value * static_cast<double>(y.size());
  // Restarts from perturbed copies of the best point when the fit is poor.
  for (double factor : {std::log(2.0), -std::log(2.0), std::log(10.0), -std::log(10.0)}) {
    if (best.value <= kGoodFit * kGoodFit * scale) break;
    std::vector<double> x = best.x;
    for (double& v : x) v += factor;
    polish(x, 0.2);
  }

  const Coeffs den = DenFromLogs(best.x);
  const Projection p = ProjectNumerator(den, y, exp.ts);
  RationalTF model(p.num, den);
  const auto sim = ComputeStepResponse(model, exp.ts,
                                       static_cast<double>(y.size() - 1) * exp.ts, 1.0);
  double dev = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) dev = std::max(dev, std::abs(sim.value[i] - y[i]));
  dev /= std::abs(final_value);
  if (!best.converged) warnings.emplace_back("simplex search hit its iteration limit");
  if (dev > 1e-3)
    warnings.emplace_back("poor fit: max deviation " + std::to_string(dev) + " of final value");
  return {model, p.sse, dev, best.converged, warnings};
}

}  // namespace

void StepExperiment::Validate() const {
  if (!(ts > 0.0)) throw ConfigError("step experiment: ts must be > 0");
  if (amplitude == 0.0 || !std::isfinite(amplitude))
    throw ConfigError("step experiment: amplitude must be nonzero");
  if (response.size() < 8) throw ConfigError("step experiment: need at least 8 samples");
  double peak = 0.0;
  for (double v : response) {
    if (!std::isfinite(v)) throw ConfigError("step experiment: non-finite sample");
    peak = std::max(peak, std::abs(v));
  }
  if (std::abs(response.front()) > 1e-9 * std::max(peak, 1.0))
    throw ConfigError("step experiment: response must start at 0 (deviation form)");
}

FitResult FitSecondOrder(const StepExperiment& exp) { return Fit(exp, 2); }

FitResult FitFirstOrder(const StepExperiment& exp) { return Fit(exp, 1); }

}  // namespace rcsim
