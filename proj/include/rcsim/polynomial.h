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

#ifndef RCSIM_POLYNOMIAL_H_
#define RCSIM_POLYNOMIAL_H_

#include <complex>
#include <span>
#include <vector>

namespace rcsim {

// Polynomial coefficients in descending powers: {c0, c1, ..., cn} is
// c0*x^n + c1*x^(n-1) + ... + cn.
using Coeffs = std::vector<double>;

namespace poly {

// Drops leading zero coefficients. An all-zero polynomial becomes {0}.
Coeffs Trim(std::span<const double> p);

// Degree after trimming; the zero polynomial has degree 0.
int Degree(std::span<const double> p);

bool IsZero(std::span<const double> p);

Coeffs Add(std::span<const double> a, std::span<const double> b);
Coeffs Multiply(std::span<const double> a, std::span<const double> b);
Coeffs Scale(std::span<const double> p, double k);
Coeffs Power(std::span<const double> p, int n);

// Left-pads with zeros to `length` coefficients.
Coeffs PadFront(std::span<const double> p, std::size_t length);

std::complex<double> Evaluate(std::span<const double> p, std::complex<double> x);
double Evaluate(std::span<const double> p, double x);

// Roots via eigenvalues of the companion matrix.
std::vector<std::complex<double>> Roots(std::span<const double> p);

// Monic real polynomial with the given roots. Complex roots must come in
// conjugate pairs; residual imaginary parts are discarded.
Coeffs FromRoots(std::span<const std::complex<double>> roots);

}  // namespace poly
}  // namespace rcsim

#endif  // RCSIM_POLYNOMIAL_H_
