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

#ifndef TMOBO_SPECIAL_FUNCTIONS_HPP
#define TMOBO_SPECIAL_FUNCTIONS_HPP

namespace tmobo {

/// Standard normal CDF.
double gaussian_cdf(double z);

/// Regularized incomplete beta function I_x(a, b), x in [0,1], a,b > 0.
/// Continued-fraction evaluation, absolute accuracy around 1e-14.
double regularized_incomplete_beta(double x, double a, double b);

/// CDF of the textbook Student-t distribution with `nu` degrees of freedom
/// (the one whose variance is nu/(nu-2)).
double student_t_cdf_standard(double t, double nu);

/// Which univariate Student-t the acquisition's CDF refers to.
///
/// The surrogate parametrizes the multivariate t so that the kernel matrix
/// is the covariance, which makes the one-dimensional marginal with unit
/// scale a *unit-variance* t. Its CDF is T_nu(z * sqrt(nu/(nu-2))) where
/// T_nu is the textbook CDF. `kStandard` is the plain T_nu reading, kept as
/// a switch for sensitivity checks.
enum class TCdfKind {
  kUnitVariance,
  kStandard,
};

/// CDF at z of the Student-t with `dof` degrees of freedom under the chosen
/// convention. Requires dof > 2; throws std::invalid_argument otherwise.
double student_t_cdf(double z, double dof,
                     TCdfKind kind = TCdfKind::kUnitVariance);

}  // namespace tmobo

#endif  // TMOBO_SPECIAL_FUNCTIONS_HPP
