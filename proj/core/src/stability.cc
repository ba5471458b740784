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

#include "spas/stability.h"

#include <algorithm>

namespace spas {

std::string to_string(StudentCondition c) {
  return c == StudentCondition::kS1 ? "S1" : "S2";
}

std::string to_string(ProjectCondition c) {
  switch (c) {
    case ProjectCondition::kP1:
      return "P1";
    case ProjectCondition::kP2:
      return "P2";
    case ProjectCondition::kP3:
      return "P3";
    case ProjectCondition::kP4:
      return "P4";
  }
  return "?";
}

std::optional<ProjectCondition> project_condition(const MatchingView& view,
                                                  StudentId s, ProjectId p) {
  const Instance& inst = view.instance();
  const LecturerId l = inst.lecturer_of(p);
  if (view.undersubscribed(p)) {
    if (view.undersubscribed(l)) return ProjectCondition::kP1;
    if (view.is_assigned_to(s, l)) return ProjectCondition::kP2;
    const auto worst = view.worst_assigned(l);
    if (worst && inst.prefers(l, s, *worst)) return ProjectCondition::kP3;
    return std::nullopt;
  }
  const auto worst = view.worst_assigned(p);
  if (worst && inst.prefers(l, s, *worst)) return ProjectCondition::kP4;
  return std::nullopt;
}

std::vector<BlockingPair> find_blocking_pairs(const MatchingView& view) {
  const Instance& inst = view.instance();
  std::vector<BlockingPair> out;
  for (std::uint32_t i = 0; i < inst.num_students(); ++i) {
    const StudentId s(i);
    const auto current = view.assigned(s);
    const StudentCondition sc =
        current ? StudentCondition::kS2 : StudentCondition::kS1;
    for (ProjectId p : inst.preferences(s)) {
      // S2 needs strict preference, so stop at the current project.
      if (current && p == *current) break;
      if (const auto pc = project_condition(view, s, p)) {
        out.push_back({s, p, sc, *pc});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BlockingPair& a, const BlockingPair& b) {
              return std::pair(a.student, a.project) <
                     std::pair(b.student, b.project);
            });
  return out;
}

std::vector<BlockingPair> find_blocking_pairs(const Instance& instance,
                                              const Matching& m) {
  return find_blocking_pairs(MatchingView(instance, m));
}

bool is_stable(const MatchingView& view) {
  const Instance& inst = view.instance();
  for (std::uint32_t i = 0; i < inst.num_students(); ++i) {
    const StudentId s(i);
    const auto current = view.assigned(s);
    for (ProjectId p : inst.preferences(s)) {
      if (current && p == *current) break;
      if (project_condition(view, s, p)) return false;
    }
  }
  return true;
}

bool is_stable(const Instance& instance, const Matching& m) {
  return is_stable(MatchingView(instance, m));
}

}  // namespace spas
