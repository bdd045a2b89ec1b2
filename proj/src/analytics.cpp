// Copyright 2026 The qec-energy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qec/analytics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qec/registry.hpp"

namespace qec {

namespace {

void check_size(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("repetition size must be odd and >= 1, got " + std::to_string(n));
  }
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational ipow(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

template <typename T>
void check_probability(const T& p) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace

Rational repetition_failure_rate(const Rational& p, int n) {
  check_size(n);
  check_probability(p);
  Rational ok = 0;
  const Rational q = 1 - p;
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    ok += Rational(binomial(n, k)) * ipow(p, k) * ipow(q, n - k);
  }
  return 1 - ok;
}

double repetition_failure_rate(double p, int n) {
  check_size(n);
  check_probability(p);
  // Sum the failing tail directly; same value as 1 minus the success sum
  // without the cancellation at small p.
  double fail = 0;
  for (int k = (n + 1) / 2; k <= n; ++k) {
    fail += binomial(n, k).convert_to<double>() * std::pow(p, k) * std::pow(1 - p, n - k);
  }
  return fail;
}

double repetition_failure_rate_leading(double p, int n) {
  check_size(n);
  check_probability(p);
  return binomial(n, (n + 1) / 2).convert_to<double>() * std::pow(p, (n + 1) / 2);
}

Rational expected_corrections(const Rational& p, int n) {
  check_size(n);
  check_probability(p);
  Rational sum = 0;
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    sum += k * Rational(binomial(n, k)) * ipow(p, k) * ipow(Rational(1 - p), n - k);
  }
  return sum;
}

double expected_corrections(double p, int n) {
  check_size(n);
  check_probability(p);
  double sum = 0;
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    sum += k * binomial(n, k).convert_to<double>() * std::pow(p, k) * std::pow(1 - p, n - k);
  }
  return sum;
}

Rational correction_energy_ratio_bound(int n) {
  check_size(n);
  return Rational((n - 1) / 2) * Rational(1, 8) / repetition_energy_coefficient(n);
}

Rational repetition_energy_coefficient(int n) {
  check_size(n);
  return Rational(5 * n - 3, 16);
}

Rational code_energy_total(const std::string& code_id) { return lookup_code(code_id).energy_coefficient; }

void ErrorCurve::validate() const {
  if (points.empty()) throw std::invalid_argument("error curve is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].error >= 0 && points[i].error <= 1)) {
      throw std::invalid_argument("error curve value outside [0, 1]");
    }
    if (i > 0 && !(points[i].energy > points[i - 1].energy)) {
      throw std::invalid_argument("error curve energies must be strictly increasing");
    }
  }
}

double ErrorCurve::interpolate(double energy) const {
  if (energy <= points.front().energy) return points.front().error;
  if (energy >= points.back().energy) return points.back().error;
  auto hi = std::lower_bound(points.begin(), points.end(), energy,
                             [](const CurvePoint& p, double e) { return p.energy < e; });
  if (hi->energy == energy) return hi->error;
  auto lo = hi - 1;
  const double t = (energy - lo->energy) / (hi->energy - lo->energy);
  return lo->error + t * (hi->error - lo->error);
}

std::optional<double> find_crossover(const ErrorCurve& a, const ErrorCurve& b,
                                     const CrossoverOptions& opts) {
  a.validate();
  b.validate();
  const double lo = std::max(a.points.front().energy, b.points.front().energy);
  const double hi = std::min(a.points.back().energy, b.points.back().energy);
  if (lo > hi) throw std::invalid_argument("find_crossover: curves have disjoint energy ranges");

  std::set<double> grid;
  for (const auto* c : {&a, &b}) {
    for (const auto& p : c->points) {
      if (p.energy >= lo && p.energy <= hi) grid.insert(p.energy);
    }
  }
  const std::vector<double> e(grid.begin(), grid.end());
  std::vector<double> d;
  for (double x : e) d.push_back(a.interpolate(x) - b.interpolate(x));

  auto root = [&](std::size_t k) {
    if (d[k] == 0) return e[k];
    return e[k] + (e[k + 1] - e[k]) * d[k] / (d[k] - d[k + 1]);
  };

  if (opts.persistence) {
    std::optional<std::size_t> last_nonneg;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] >= 0) last_nonneg = i;
    }
    if (!last_nonneg || *last_nonneg + 1 == d.size()) return std::nullopt;
    const bool seen_positive =
        std::any_of(d.begin(), d.begin() + std::ptrdiff_t(*last_nonneg) + 1, [](double x) { return x > 0; });
    if (!seen_positive) return std::nullopt;
    return root(*last_nonneg);
  }

  bool seen_positive = false;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    seen_positive = seen_positive || d[i] > 0;
    if (seen_positive && d[i] >= 0 && d[i + 1] < 0) return root(i);
  }
  return std::nullopt;
}

ExponentialFit fit_exponential(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("fit_exponential: need at least two points");
  const auto m = Eigen::Index(points.size());
  Eigen::MatrixXd A(m, 2);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& [n, energy] = points[std::size_t(i)];
    if (!(energy > 0)) throw std::invalid_argument("fit_exponential: energies must be positive");
    A(i, 0) = 1;
    A(i, 1) = n;
    y(i) = std::log(energy);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < 2) throw std::invalid_argument("fit_exponential: need at least two distinct N");
  const Eigen::Vector2d coef = qr.solve(y);
  const double residual = std::sqrt((A * coef - y).squaredNorm() / double(m));
  return {std::exp(coef(0)), coef(1), residual};
}

}  // namespace qec
