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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qec/rational.hpp"

namespace qec {

// Majority-vote failure of an N-fold repetition code with
// independent flips of probability p.
Rational repetition_failure_rate(const Rational& p, int n);
double repetition_failure_rate(double p, int n);
double repetition_failure_rate_leading(double p, int n);

Rational expected_corrections(const Rational& p, int n);
double expected_corrections(double p, int n);

// (N-1)/2 X corrections at 1/8 each, relative to the (5N-3)/16 budget.
Rational correction_energy_ratio_bound(int n);

// (5N - 3) / 16, in units of pi^2 / eps^2.
Rational repetition_energy_coefficient(int n);

// Tallied coefficient of the registered pipeline.
Rational code_energy_total(const std::string& code_id);

struct CurvePoint {
  double energy;
  double error;
  double std_error = 0;
};

struct ErrorCurve {
  std::vector<CurvePoint> points;

  void validate() const;
  double interpolate(double energy) const;
};

struct CrossoverOptions {
  // Require a - b to stay negative at every later grid point, returning the
  // last crossing after which that holds.
  bool persistence = true;
};

// Energy at which a becomes lower than b (a - b goes from positive to
// negative). Swapping the arguments finds where b becomes lower than a.
std::optional<double> find_crossover(const ErrorCurve& a, const ErrorCurve& b,
                                     const CrossoverOptions& opts = {});

struct ExponentialFit {
  double amplitude;
  double rate;
  double residual;
};

// Least squares on ln E = ln a + b N.
ExponentialFit fit_exponential(const std::vector<std::pair<double, double>>& points);

}  // namespace qec
