// Copyright 2026 The invforge Authors
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
//
// Reference checks shared by the acceptance binary and `invforge
// verify-all`.

#ifndef INVFORGE_VERIFY_VERIFY_HPP_
#define INVFORGE_VERIFY_VERIFY_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invforge/arith.hpp"
#include "invforge/transvect.hpp"

namespace invforge::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool within_time = true;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;

  bool ok() const { return passed && within_time; }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
};

const std::vector<Criterion>& desk_criteria();

// Runs one criterion; exceptions become failures with the message as
// detail.
CriterionResult run_criterion(int id);

// Runs all criteria in order, calling `on_result` after each.
std::vector<CriterionResult> run_desk_suite(
    const std::function<void(const CriterionResult&)>& on_result = {});

// If F = c * Q^e for a rational quadratic Q and rational c, returns Q with
// its first nonzero coefficient equal to one. F must have degree 2e with
// concrete coefficients. The zero form is reported as a power (of x0^2,
// scaled by zero).
std::optional<BinaryForm> quadratic_root(const BinaryForm& f, unsigned e);

// Binary form sum c_i x0^{d-i} x1^i in the registry {x0, x1}.
BinaryForm concrete_form(const std::vector<Rational>& coeffs);

}  // namespace invforge::verify

#endif  // INVFORGE_VERIFY_VERIFY_HPP_
