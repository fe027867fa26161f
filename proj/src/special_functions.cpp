// Copyright 2026 The tmobo Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// =============================================================================

#include "tmobo/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tmobo {

double gaussian_cdf(double z) {
  if (std::isnan(z)) return z;
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
// Valid for x < (a+1)/(a+b+2); the caller uses the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a) otherwise.
double beta_continued_fraction(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;

  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;

  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    // Even step.
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    // Odd step.
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (std::isnan(x) || std::isnan(a) || std::isnan(b)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (a <= 0.0 || b <= 0.0 || x < 0.0 || x > 1.0) {
    throw std::invalid_argument("regularized_incomplete_beta: need a,b > 0 and x in [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
      a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(x, a, b) / a;
  }
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double student_t_cdf_standard(double t, double nu) {
  if (std::isnan(t)) return t;
  if (!(nu > 0.0)) {
    throw std::invalid_argument("student_t_cdf_standard: nu must be > 0");
  }
  if (std::isinf(t)) return t > 0.0 ? 1.0 : 0.0;
  if (t == 0.0) return 0.5;
  const double x = nu / (t * t + nu);
  const double half_tail = 0.5 * regularized_incomplete_beta(x, 0.5 * nu, 0.5);
  return t > 0.0 ? 1.0 - half_tail : half_tail;
}

double student_t_cdf(double z, double dof, TCdfKind kind) {
  if (!(dof > 2.0)) {
    throw std::invalid_argument("student_t_cdf: dof must be > 2");
  }
  if (kind == TCdfKind::kUnitVariance) {
    // Rescale so that the distribution being evaluated has unit variance.
    return student_t_cdf_standard(z * std::sqrt(dof / (dof - 2.0)), dof);
  }
  return student_t_cdf_standard(z, dof);
}

}  // namespace tmobo
