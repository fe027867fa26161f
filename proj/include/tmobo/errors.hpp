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

#ifndef TMOBO_ERRORS_HPP
#define TMOBO_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tmobo {

/// Cholesky factorization failed even after the escalating jitter policy.
/// Carries the jitter levels that were attempted before giving up.
class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(std::string what, std::vector<double> attempted_jitters)
      : std::runtime_error(std::move(what)),
        attempted_jitters_(std::move(attempted_jitters)) {}

  const std::vector<double>& attempted_jitters() const noexcept {
    return attempted_jitters_;
  }

 private:
  std::vector<double> attempted_jitters_;
};

/// Invalid or unknown field in an experiment config file. `field()` is the
/// dotted path of the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace tmobo

#endif  // TMOBO_ERRORS_HPP
