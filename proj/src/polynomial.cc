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

#include "rcsim/polynomial.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace rcsim::poly {

Coeffs Trim(std::span<const double> p) {
  auto first = std::find_if(p.begin(), p.end(), [](double c) { return c != 0.0; });
  if (first == p.end()) return {0.0};
  return Coeffs(first, p.end());
}

int Degree(std::span<const double> p) {
  return static_cast<int>(Trim(p).size()) - 1;
}

bool IsZero(std::span<const double> p) {
  return std::all_of(p.begin(), p.end(), [](double c) { return c == 0.0; });
}

Coeffs PadFront(std::span<const double> p, std::size_t length) {
  if (p.size() >= length) return Coeffs(p.begin(), p.end());
  Coeffs out(length - p.size(), 0.0);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

Coeffs Add(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = std::max(a.size(), b.size());
  Coeffs pa = PadFront(a, n);
  Coeffs pb = PadFront(b, n);
  for (std::size_t i = 0; i < n; ++i) pa[i] += pb[i];
  return Trim(pa);
}

Coeffs Multiply(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {0.0};
  Coeffs out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return Trim(out);
}

Coeffs Scale(std::span<const double> p, double k) {
  Coeffs out(p.begin(), p.end());
  for (double& c : out) c *= k;
  return Trim(out);
}

Coeffs Power(std::span<const double> p, int n) {
  Coeffs out{1.0};
  for (int i = 0; i < n; ++i) out = Multiply(out, p);
  return out;
}

std::complex<double> Evaluate(std::span<const double> p, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (double c : p) acc = acc * x + c;
  return acc;
}

double Evaluate(std::span<const double> p, double x) {
  double acc = 0.0;
  for (double c : p) acc = acc * x + c;
  return acc;
}

std::vector<std::complex<double>> Roots(std::span<const double> p) {
  Coeffs t = Trim(p);
  // Zeros at the origin show up as trailing zero coefficients.
  std::size_t origin = 0;
  while (t.size() > 1 && t.back() == 0.0) {
    t.pop_back();
    ++origin;
  }
  const int n = static_cast<int>(t.size()) - 1;
  std::vector<std::complex<double>> roots(origin, 0.0);
  if (n <= 0) return roots;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) companion(0, j) = -t[j + 1] / t[0];
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("companion-matrix eigenvalue solve failed");
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

Coeffs FromRoots(std::span<const std::complex<double>> roots) {
  std::vector<std::complex<double>> acc{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(acc.size() + 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i];
      next[i + 1] -= acc[i] * r;
    }
    acc = std::move(next);
  }
  Coeffs out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i].real();
  return out;
}

}  // namespace rcsim::poly
