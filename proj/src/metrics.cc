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

#include "rcsim/metrics.h"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "rcsim/errors.h"

namespace rcsim {
namespace {

struct SampleRange {
  std::size_t begin;
  std::size_t end;
};

SampleRange Window(const SimTrace& tr, double t0, double t1) {
  if (tr.size() == 0) throw ConfigError("index window: empty trace");
  const double start = tr.time.front();
  const double stop = tr.time.back() + tr.ts;
  if (t0 < start - 1e-9 || t1 > stop + 1e-9)
    throw ConfigError("index window [" + FormatNumber(t0) + ", " + FormatNumber(t1) +
                      ") lies outside the trace");
  const auto begin = static_cast<std::size_t>(std::ceil((t0 - start) / tr.ts - 1e-9));
  const auto end = std::min(tr.size(),
                            static_cast<std::size_t>(std::ceil((t1 - start) / tr.ts - 1e-9)));
  if (begin >= end) throw ConfigError("index window [" + FormatNumber(t0) + ", " +
                                      FormatNumber(t1) + ") contains no samples");
  return {begin, end};
}

const std::vector<double>& Reference(const SimTrace& tr, int loop) {
  if (loop == 1) return tr.r1;
  if (loop == 2) return tr.r2;
  throw ConfigError("loop must be 1 or 2");
}

const std::vector<double>& Output(const SimTrace& tr, int loop) {
  return loop == 1 ? tr.y1 : tr.y2;
}

const std::vector<double>& Input(const SimTrace& tr, int loop) {
  if (loop == 1) return tr.av;
  if (loop == 2) return tr.n;
  throw ConfigError("loop must be 1 or 2");
}

double FullEnd(const SimTrace& tr) { return tr.time.back() + tr.ts; }

constexpr PublishedTable kPublished[] = {
    {"C2 vs C1", {0.4482, 0.5188, 1.0003, 0.9999, 0.7236, 0.3720, 1.7204, 1.1452}, 0.7445},
    {"C3 vs C2", {0.9058, 0.7794, 0.7303, 0.5574, 0.5088, 0.6032, 1.0168, 1.2045}, 0.7517},
    {"C3 vs C1", {0.4060, 0.4043, 0.7305, 0.5573, 0.3682, 0.2244, 1.7494, 1.7494}, 0.5662},
};

}  // namespace

double Iae(const SimTrace& tr, int loop, double t0, double t1) {
  const auto& r = Reference(tr, loop);
  const auto& y = Output(tr, loop);
  const SampleRange w = Window(tr, t0, t1);
  double sum = 0.0;
  for (std::size_t k = w.begin; k < w.end; ++k) sum += tr.ts * std::abs(r[k] - y[k]);
  return sum;
}

double Itae(const SimTrace& tr, int loop, double tc, double window) {
  const auto& r = Reference(tr, loop);
  const auto& y = Output(tr, loop);
  const SampleRange w = Window(tr, tc, tc + window);
  double sum = 0.0;
  for (std::size_t k = w.begin; k < w.end; ++k)
    sum += tr.ts * (tr.time[k] - tc) * std::abs(r[k] - y[k]);
  return sum;
}

double Iavu(const SimTrace& tr, int loop, double t0, double t1) {
  const auto& u = Input(tr, loop);
  const SampleRange w = Window(tr, t0, t1);
  double sum = 0.0;
  for (std::size_t k = w.begin + 1; k < w.end; ++k) sum += std::abs(u[k] - u[k - 1]);
  return sum;
}

std::array<std::string_view, kIndexCount> IndexLabels() {
  return {"RIAE1", "RIAE2", "RITAE1", "RITAE2", "RITAE3", "RITAE4", "RIAVU1", "RIAVU2"};
}

IndexWeights IndexWeights::Equal() {
  IndexWeights w;
  w.w.fill(1.0);
  return w;
}

IndexWeights IndexWeights::Prior() { return {{1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.3, 0.3}}; }

IndexWeights IndexWeights::Reconstructed() {
  return {{1.0, 0.751175546589311, 0.7125895672389828, 0.536549915094739, 0.3496431702798137,
           0.3747326340308043, 0.2941451603970407, 0.015882824192986297}};
}

void IndexWeights::Validate() const {
  double sum = 0.0;
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("index weights must be finite and >= 0");
    sum += v;
  }
  if (!(sum > 0.0)) throw ConfigError("index weights must not all be zero");
}

double CombinedIndex(const IndexVector& indices, const IndexWeights& weights) {
  weights.Validate();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < kIndexCount; ++i) {
    num += weights.w[i] * indices[i];
    den += weights.w[i];
  }
  return num / den;
}

IndexReport RelativeReport(const SimTrace& cand, const SimTrace& base,
                           const std::array<IndexWindow, 4>& windows,
                           const IndexWeights& weights) {
  if (cand.size() != base.size() || cand.ts != base.ts ||
      (cand.size() > 0 && cand.time.front() != base.time.front()))
    throw ConfigError("relative indices need traces on the same time grid");
  auto absolute = [&](const SimTrace& tr) {
    IndexVector v{};
    v[0] = Iae(tr, 1, tr.time.front(), FullEnd(tr));
    v[1] = Iae(tr, 2, tr.time.front(), FullEnd(tr));
    for (std::size_t i = 0; i < 4; ++i)
      v[2 + i] = Itae(tr, windows[i].loop, windows[i].tc, windows[i].length);
    v[6] = Iavu(tr, 1, tr.time.front(), FullEnd(tr));
    v[7] = Iavu(tr, 2, tr.time.front(), FullEnd(tr));
    return v;
  };
  const IndexVector c = absolute(cand);
  const IndexVector b = absolute(base);
  const auto labels = IndexLabels();
  IndexReport report;
  for (std::size_t i = 0; i < kIndexCount; ++i) {
    if (b[i] == 0.0)
      throw NumericError(std::string("baseline ") + std::string(labels[i].substr(1)) +
                         " is zero; relative index " + std::string(labels[i]) + " undefined");
    report.indices[i] = c[i] / b[i];
  }
  report.j = CombinedIndex(report.indices, weights);
  for (std::size_t i = 0; i < 4; ++i)
    report.notes.push_back(std::string(labels[2 + i]) + ": loop " +
                           std::to_string(windows[i].loop) + ", tc=" +
                           FormatNumber(windows[i].tc) + " s, window=" +
                           FormatNumber(windows[i].length) + " s");
  report.notes.emplace_back(
      "RITAE3/RITAE4 correspond to the rows printed as RIAE2(.., tc3, ts3) and "
      "RIAE2(.., tc4, ts4) in the published comparisons");
  return report;
}

std::string FormatReportTable(const IndexReport& report, std::string_view cand,
                              std::string_view base) {
  std::ostringstream os;
  const auto labels = IndexLabels();
  const std::string pair = "(" + std::string(cand) + "," + std::string(base) + ")";
  os << std::left << std::setw(20) << "Index" << "Value\n";
  os << std::string(32, '-') << '\n';
  for (std::size_t i = 0; i < kIndexCount; ++i)
    os << std::left << std::setw(20) << (std::string(labels[i]) + pair) << std::fixed
       << std::setprecision(4) << report.indices[i] << '\n';
  os << std::string(32, '-') << '\n';
  os << std::left << std::setw(20) << ("J" + pair) << std::fixed << std::setprecision(4)
     << report.j << '\n';
  for (const auto& note : report.notes) os << "# " << note << '\n';
  return os.str();
}

std::string FormatReportCsv(const IndexReport& report) {
  std::ostringstream os;
  const auto labels = IndexLabels();
  os << "index,value\n";
  for (std::size_t i = 0; i < kIndexCount; ++i)
    os << labels[i] << ',' << FormatNumber(report.indices[i]) << '\n';
  os << "J," << FormatNumber(report.j) << '\n';
  return os.str();
}

std::span<const PublishedTable> PublishedTables() { return kPublished; }

WeightCalibration CalibrateWeights(std::span<const PublishedTable> tables,
                                   const IndexWeights& prior) {
  prior.Validate();
  const auto m = static_cast<Eigen::Index>(tables.size());
  constexpr auto n = static_cast<Eigen::Index>(kIndexCount);
  // Constraints: (indices_t - J_t) . w = 0 per table, sum(w) = 1.
  Eigen::MatrixXd a(m + 1, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1);
  for (Eigen::Index t = 0; t < m; ++t)
    for (Eigen::Index i = 0; i < n; ++i)
      a(t, i) = tables[static_cast<std::size_t>(t)].indices[static_cast<std::size_t>(i)] -
                tables[static_cast<std::size_t>(t)].j;
  a.row(m).setOnes();
  b(m) = 1.0;
  Eigen::VectorXd w0(n);
  for (Eigen::Index i = 0; i < n; ++i) w0(i) = prior.w[static_cast<std::size_t>(i)];
  w0 /= w0.sum();
  // Minimum-distance projection onto {w : A w = b}.
  const Eigen::VectorXd lambda = (a * a.transpose()).ldlt().solve(a * w0 - b);
  Eigen::VectorXd w = w0 - a.transpose() * lambda;

  WeightCalibration out;
  out.nonnegative = (w.array() >= 0.0).all();
  w /= w(0);
  for (Eigen::Index i = 0; i < n; ++i) out.weights.w[static_cast<std::size_t>(i)] = w(i);
  for (const auto& t : tables) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < kIndexCount; ++i) {
      num += out.weights.w[i] * t.indices[i];
      den += out.weights.w[i];
    }
    out.residuals.push_back(num / den - t.j);
  }
  return out;
}

}  // namespace rcsim
