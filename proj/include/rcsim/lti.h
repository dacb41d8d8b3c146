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

#ifndef RCSIM_LTI_H_
#define RCSIM_LTI_H_

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rcsim/polynomial.h"

namespace rcsim {

enum class Discretization { kZoh, kTustin };

std::string_view ToString(Discretization method);
// Accepts "zoh" and "tustin" (also "bilinear"). Throws ConfigError otherwise.
Discretization ParseDiscretization(std::string_view name);

// Continuous-time SISO transfer function num(s)/den(s). Coefficients are
// stored trimmed with a monic denominator. Improper ratios can be
// represented so that callers can diagnose them; realisation and
// discretisation reject them.
class RationalTF {
 public:
  RationalTF(Coeffs num, Coeffs den);

  static RationalTF Gain(double k) { return RationalTF({k}, {1.0}); }

  const Coeffs& num() const { return num_; }
  const Coeffs& den() const { return den_; }

  int num_degree() const { return static_cast<int>(num_.size()) - 1; }
  int den_degree() const { return static_cast<int>(den_.size()) - 1; }
  bool is_proper() const { return num_degree() <= den_degree(); }
  bool is_strictly_proper() const {
    return num_degree() < den_degree() || poly::IsZero(num_);
  }

  std::complex<double> operator()(std::complex<double> s) const;

  // Value at s = 0. Throws NumericError for a pole at the origin.
  double dc_gain() const;

  std::vector<std::complex<double>> poles() const { return poly::Roots(den_); }
  std::vector<std::complex<double>> zeros() const;

  // All poles strictly in the open left half-plane.
  bool is_stable() const;

 private:
  Coeffs num_;
  Coeffs den_;
};

struct StateSpace {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  Eigen::MatrixXd c;
  Eigen::MatrixXd d;

  int order() const { return static_cast<int>(a.rows()); }

  // C (sI - A)^-1 B + D for the single-input single-output case.
  std::complex<double> FrequencyResponse(std::complex<double> s) const;
};

// Controllable canonical realisation. Throws std::invalid_argument when the
// transfer function is improper.
StateSpace TfToSs(const RationalTF& tf);

// Exact zero-order-hold sampling of a continuous realisation. Throws
// NumericError if the matrix exponential is not finite.
StateSpace ZohSample(const StateSpace& sys, double ts);

// Characteristic polynomial det(zI - A) (Faddeev-LeVerrier).
Coeffs CharacteristicPolynomial(const Eigen::MatrixXd& a);

// z-domain filter in direct form II transposed. The denominator is
// normalised monic and the numerator left-padded to the same length, so the
// difference equation only touches current and past samples.
class DiscreteFilter {
 public:
  DiscreteFilter(Coeffs num_z, Coeffs den_z, double ts);

  static DiscreteFilter Gain(double k, double ts) {
    return DiscreteFilter({k}, {1.0}, ts);
  }

  // One sample of the difference equation; advances the state.
  double Step(double u);
  // Output the next Step(u) would return, without advancing.
  double Peek(double u) const;
  void Reset();

  const Coeffs& num() const { return num_; }
  const Coeffs& den() const { return den_; }
  double ts() const { return ts_; }
  int order() const { return static_cast<int>(den_.size()) - 1; }
  const std::vector<double>& state() const { return state_; }

  // sum(num) / sum(den). Throws NumericError for a pole at z = 1.
  double dc_gain() const;
  std::vector<std::complex<double>> poles() const { return poly::Roots(den_); }
  // |pole| < 1 - 1e-9 for every pole.
  bool is_stable() const;

 private:
  Coeffs num_;
  Coeffs den_;
  double ts_;
  std::vector<double> state_;
};

DiscreteFilter C2d(const RationalTF& tf, double ts, Discretization method);

struct StepResponse {
  std::vector<double> time;
  std::vector<double> value;
  // False when the transfer function has a pole on or right of the
  // imaginary axis. The series is still computed.
  bool stable = true;
};

// Response to amplitude * unit step applied at t = 0, sampled at
// t = 0, ts, ..., floor(horizon / ts) * ts by exact discretisation.
StepResponse ComputeStepResponse(const RationalTF& tf, double ts, double horizon,
                                 double amplitude);

std::string Describe(const RationalTF& tf);

}  // namespace rcsim

#endif  // RCSIM_LTI_H_
