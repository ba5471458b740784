/*
Copyright 2026 The spas Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SPAS_SOLVERS_H_
#define SPAS_SOLVERS_H_

#include <optional>
#include <string>
#include <string_view>

#include "spas/enumeration.h"
#include "spas/instance.h"
#include "spas/matching.h"

namespace spas {

enum class SolveMethod {
  // Meet (or join) of every stable matching. Exponential; subject to the
  // enumeration size guard.
  kEnumerationExtremum,
  // Student-proposing or lecturer-proposing deferred acceptance. Polynomial.
  kDeferredAcceptance,
};

std::string to_string(SolveMethod method);
std::optional<SolveMethod> parse_solve_method(std::string_view text);

// Every student gets the best project they hold in any stable matching.
Matching solve_student_optimal(
    const Instance& instance,
    SolveMethod method = SolveMethod::kEnumerationExtremum,
    const EnumerateOptions& options = {});

// Every student gets the worst project they hold in any stable matching;
// this is the matching every lecturer weakly prefers to all others.
Matching solve_lecturer_optimal(
    const Instance& instance,
    SolveMethod method = SolveMethod::kEnumerationExtremum,
    const EnumerateOptions& options = {});

}  // namespace spas

#endif  // SPAS_SOLVERS_H_
