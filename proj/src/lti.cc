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
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "rcsim/errors.h"

namespace rcsim {
namespace {

constexpr double kDiscreteStabilityMargin = 1e-9;

bool AllFinite(const Eigen::MatrixXd& m) { return m.allFinite(); }

void RequireProper(const RationalTF& tf, const char* op) {
  if (!tf.is_proper()) {
    std::ostringstream msg;
    msg << op << ": improper transfer function (numerator degree "
        << tf.num_degree() << " > denominator degree " << tf.den_degree() << ")";
    throw std::invalid_argument(msg.str());
  }
}

void RequirePositiveTs(double ts, const char* op) {
  if (!(ts > 0.0) || !std::isfinite(ts))
    throw std::invalid_argument(std::string(op) + ": sampling period must be > 0");
}

DiscreteFilter ZohDiscretize(const RationalTF& tf, double ts) {
  if (tf.den_degree() == 0) return DiscreteFilter::Gain(tf.num()[0] / tf.den()[0], ts);
  const StateSpace sampled = ZohSample(TfToSs(tf), ts);
  // SISO: C(zI-A)^-1 B = (det(zI - A + BC) - det(zI - A)) / det(zI - A).
  const Coeffs den = CharacteristicPolynomial(sampled.a);
  const Coeffs closed = CharacteristicPolynomial(sampled.a - sampled.b * sampled.c);
  const double d = sampled.d(0, 0);
  Coeffs num(den.size());
  for (std::size_t i = 0; i < den.size(); ++i) num[i] = closed[i] - den[i] + d * den[i];
  num[0] = d;  // leading terms cancel exactly apart from the feedthrough
  return DiscreteFilter(std::move(num), den, ts);
}

DiscreteFilter TustinDiscretize(const RationalTF& tf, double ts) {
  const int n = tf.den_degree();
  const double k = 2.0 / ts;
  const Coeffs num = poly::PadFront(tf.num(), n + 1);
  const Coeffs& den = tf.den();
  const Coeffs zm1{1.0, -1.0};
  const Coeffs zp1{1.0, 1.0};
  Coeffs num_z(n + 1, 0.0);
  Coeffs den_z(n + 1, 0.0);
  // s^p -> k^p (z-1)^p (z+1)^(n-p) after clearing (z+1)^n.
  for (int i = 0; i <= n; ++i) {
    const int p = n - i;
    const Coeffs basis = poly::PadFront(
        poly::Multiply(poly::Power(zm1, p), poly::Power(zp1, n - p)), n + 1);
    const double kp = std::pow(k, p);
    for (int j = 0; j <= n; ++j) {
      num_z[j] += num[i] * kp * basis[j];
      den_z[j] += den[i] * kp * basis[j];
    }
  }
  return DiscreteFilter(std::move(num_z), std::move(den_z), ts);
}

}  // namespace

std::string_view ToString(Discretization method) {
  return method == Discretization::kZoh ? "zoh" : "tustin";
}

Discretization ParseDiscretization(std::string_view name) {
  if (name == "zoh") return Discretization::kZoh;
  if (name == "tustin" || name == "bilinear") return Discretization::kTustin;
  throw ConfigError("unknown discretization method '" + std::string(name) +
                    "' (expected zoh or tustin)");
}

RationalTF::RationalTF(Coeffs num, Coeffs den) {
  if (num.empty()) num = {0.0};
  den = poly::Trim(den);
  if (poly::IsZero(den))
    throw std::invalid_argument("transfer function denominator is zero");
  for (double c : num)
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite numerator coefficient");
  for (double c : den)
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite denominator coefficient");
  const double lead = den.front();
  num_ = poly::Scale(poly::Trim(num), 1.0 / lead);
  den_ = poly::Scale(den, 1.0 / lead);
  den_.front() = 1.0;
}

std::complex<double> RationalTF::operator()(std::complex<double> s) const {
  return poly::Evaluate(num_, s) / poly::Evaluate(den_, s);
}

double RationalTF::dc_gain() const {
  const double d = den_.back();
  if (d == 0.0) throw NumericError("transfer function has a pole at s = 0");
  return num_.back() / d;
}

std::vector<std::complex<double>> RationalTF::zeros() const {
  if (poly::IsZero(num_)) return {};
  return poly::Roots(num_);
}

bool RationalTF::is_stable() const {
  for (const auto& p : poles())
    if (!(p.real() < 0.0)) return false;
  return true;
}

std::complex<double> StateSpace::FrequencyResponse(std::complex<double> s) const {
  const int n = order();
  const std::complex<double> d0 = d(0, 0);
  if (n == 0) return d0;
  Eigen::MatrixXcd m = s * Eigen::MatrixXcd::Identity(n, n) - a.cast<std::complex<double>>();
  Eigen::VectorXcd x = m.partialPivLu().solve(b.col(0).cast<std::complex<double>>());
  return (c.row(0).cast<std::complex<double>>() * x)(0) + d0;
}

StateSpace TfToSs(const RationalTF& tf) {
  RequireProper(tf, "tf_to_ss");
  const int n = tf.den_degree();
  const Coeffs num = poly::PadFront(tf.num(), n + 1);
  const Coeffs& den = tf.den();
  StateSpace ss;
  ss.a = Eigen::MatrixXd::Zero(n, n);
  ss.b = Eigen::MatrixXd::Zero(n, 1);
  ss.c = Eigen::MatrixXd::Zero(1, n);
  ss.d = Eigen::MatrixXd::Constant(1, 1, num[0]);
  for (int j = 0; j < n; ++j) {
    ss.a(0, j) = -den[j + 1];
    ss.c(0, j) = num[j + 1] - num[0] * den[j + 1];
  }
  for (int i = 1; i < n; ++i) ss.a(i, i - 1) = 1.0;
  if (n > 0) ss.b(0, 0) = 1.0;
  return ss;
}

StateSpace ZohSample(const StateSpace& sys, double ts) {
  RequirePositiveTs(ts, "zoh");
  const int n = sys.order();
  const int m = static_cast<int>(sys.b.cols());
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = sys.a * ts;
  aug.topRightCorner(n, m) = sys.b * ts;
  if (!AllFinite(aug)) throw NumericError("zoh: non-finite system matrices");
  const Eigen::MatrixXd e = aug.exp();
  if (!AllFinite(e)) throw NumericError("zoh: matrix exponential is not finite");
  return StateSpace{e.topLeftCorner(n, n), e.topRightCorner(n, m), sys.c, sys.d};
}

Coeffs CharacteristicPolynomial(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  Coeffs c(n + 1, 0.0);
  c[0] = 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[k - 1] * eye;
    c[k] = -(a * m).trace() / k;
  }
  return c;
}

DiscreteFilter::DiscreteFilter(Coeffs num_z, Coeffs den_z, double ts) : ts_(ts) {
  RequirePositiveTs(ts, "discrete filter");
  den_z = poly::Trim(den_z);
  if (poly::IsZero(den_z)) throw std::invalid_argument("discrete filter denominator is zero");
  num_z = poly::Trim(num_z.empty() ? Coeffs{0.0} : num_z);
  if (num_z.size() > den_z.size())
    throw std::invalid_argument("discrete filter is non-causal (numerator degree exceeds denominator)");
  const double lead = den_z.front();
  den_ = den_z;
  for (double& c : den_) c /= lead;
  den_.front() = 1.0;
  num_ = poly::PadFront(num_z, den_.size());
  for (double& c : num_) c /= lead;
  state_.assign(den_.size() - 1, 0.0);
}

double DiscreteFilter::Peek(double u) const {
  return num_[0] * u + (state_.empty() ? 0.0 : state_[0]);
}

double DiscreteFilter::Step(double u) {
  const double y = Peek(u);
  const std::size_t n = state_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double next = i + 1 < n ? state_[i + 1] : 0.0;
    state_[i] = next + num_[i + 1] * u - den_[i + 1] * y;
  }
  return y;
}

void DiscreteFilter::Reset() { std::fill(state_.begin(), state_.end(), 0.0); }

double DiscreteFilter::dc_gain() const {
  double n = 0.0, d = 0.0;
  for (double c : num_) n += c;
  for (double c : den_) d += c;
  if (d == 0.0) throw NumericError("discrete filter has a pole at z = 1");
  return n / d;
}

bool DiscreteFilter::is_stable() const {
  for (const auto& p : poles())
    if (!(std::abs(p) < 1.0 - kDiscreteStabilityMargin)) return false;
  return true;
}

DiscreteFilter C2d(const RationalTF& tf, double ts, Discretization method) {
  RequirePositiveTs(ts, "c2d");
  RequireProper(tf, "c2d");
  DiscreteFilter f = method == Discretization::kZoh ? ZohDiscretize(tf, ts)
                                                     : TustinDiscretize(tf, ts);
  for (double c : f.num())
    if (!std::isfinite(c)) throw NumericError("c2d: non-finite numerator coefficient");
  for (double c : f.den())
    if (!std::isfinite(c)) throw NumericError("c2d: non-finite denominator coefficient");
  return f;
}

StepResponse ComputeStepResponse(const RationalTF& tf, double ts, double horizon,
                                 double amplitude) {
  RequirePositiveTs(ts, "step_response");
  if (!(horizon > 0.0)) throw std::invalid_argument("step_response: horizon must be > 0");
  const StateSpace sampled = ZohSample(TfToSs(tf), ts);
  const auto samples = static_cast<std::size_t>(std::floor(horizon / ts + 1e-9)) + 1;
  StepResponse out;
  out.stable = tf.is_stable();
  out.time.reserve(samples);
  out.value.reserve(samples);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(sampled.order());
  const double d = sampled.d(0, 0);
  for (std::size_t k = 0; k < samples; ++k) {
    out.time.push_back(static_cast<double>(k) * ts);
    const double y = sampled.order() > 0 ? (sampled.c * x)(0) + d * amplitude : d * amplitude;
    if (!std::isfinite(y)) throw NumericError("step_response: non-finite output");
    out.value.push_back(y);
    if (sampled.order() > 0) x = sampled.a * x + sampled.b.col(0) * amplitude;
  }
  return out;
}

std::string Describe(const RationalTF& tf) {
  std::ostringstream os;
  os.precision(10);
  os << "[";
  for (std::size_t i = 0; i < tf.num().size(); ++i) os << (i ? ", " : "") << tf.num()[i];
  os << "] / [";
  for (std::size_t i = 0; i < tf.den().size(); ++i) os << (i ? ", " : "") << tf.den()[i];
  os << "]";
  return os.str();
}

}  // namespace rcsim
