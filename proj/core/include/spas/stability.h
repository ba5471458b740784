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

#ifndef SPAS_STABILITY_H_
#define SPAS_STABILITY_H_

#include <optional>
#include <string>
#include <vector>

#include "spas/ids.h"
#include "spas/instance.h"
#include "spas/matching.h"

namespace spas {

// Why the student would move:
//   S1  the student is unassigned;
//   S2  the student prefers the project to their current one.
enum class StudentCondition { kS1, kS2 };

// Why the project side would accept, with p offered by l:
//   P1  p and l are both undersubscribed;
//   P2  p is undersubscribed, l is full, and the student is already one of
//       l's students;
//   P3  p is undersubscribed, l is full, and l prefers the student to the
//       worst student assigned to l;
//   P4  p is full and l prefers the student to the worst student assigned
//       to p.
enum class ProjectCondition { kP1, kP2, kP3, kP4 };

std::string to_string(StudentCondition c);
std::string to_string(ProjectCondition c);

struct BlockingPair {
  StudentId student;
  ProjectId project;
  StudentCondition student_condition;
  ProjectCondition project_condition;

  friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

// Project-side condition satisfied by (s, p) against `view`, taking the
// lowest-numbered one when several hold. Ignores the student side.
std::optional<ProjectCondition> project_condition(const MatchingView& view,
                                                  StudentId s, ProjectId p);

// All blocking pairs, ordered by (student, project). Throws
// InvalidMatchingError if `m` is not a valid matching.
std::vector<BlockingPair> find_blocking_pairs(const Instance& instance,
                                              const Matching& m);
std::vector<BlockingPair> find_blocking_pairs(const MatchingView& view);

bool is_stable(const Instance& instance, const Matching& m);
bool is_stable(const MatchingView& view);

}  // namespace spas

#endif  // SPAS_STABILITY_H_
