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

#include "support/oracle.h"

#include <algorithm>

namespace spas::testing {
namespace {

using Assignment = std::vector<std::optional<ProjectId>>;

std::size_t PositionIn(std::span<const ProjectId> list, ProjectId p) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), p) -
                                  list.begin());
}

std::size_t PositionIn(std::span<const StudentId> list, StudentId s) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), s) -
                                  list.begin());
}

bool FitsCapacities(const Instance& instance, const Assignment& a) {
  std::vector<std::uint32_t> per_project(instance.num_projects(), 0);
  std::vector<std::uint32_t> per_lecturer(instance.num_lecturers(), 0);
  for (const auto& p : a) {
    if (!p) continue;
    if (++per_project[p->index()] > instance.capacity(*p)) return false;
    const LecturerId l = instance.lecturer_of(*p);
    if (++per_lecturer[l.index()] > instance.capacity(l)) return false;
  }
  return true;
}

}  // namespace

std::vector<BlockingPair> naive_blocking_pairs(const Instance& instance,
                                               const Assignment& a) {
  std::vector<BlockingPair> out;
  for (std::uint32_t i = 0; i < instance.num_students(); ++i) {
    const StudentId s(i);
    const auto list = instance.preferences(s);
    for (const ProjectId p : list) {
      if (a[i] == p) continue;
      StudentCondition sc;
      if (!a[i]) {
        sc = StudentCondition::kS1;
      } else if (PositionIn(list, p) < PositionIn(list, *a[i])) {
        sc = StudentCondition::kS2;
      } else {
        continue;
      }

      const LecturerId l = instance.lecturer_of(p);
      const auto lecturer_list = instance.preferences(l);
      std::vector<StudentId> of_p;
      std::vector<StudentId> of_l;
      for (std::uint32_t t = 0; t < instance.num_students(); ++t) {
        if (!a[t]) continue;
        if (*a[t] == p) of_p.push_back(StudentId(t));
        if (instance.lecturer_of(*a[t]) == l) of_l.push_back(StudentId(t));
      }
      const bool p_under = of_p.size() < instance.capacity(p);
      const bool l_under = of_l.size() < instance.capacity(l);
      const bool l_full = of_l.size() == instance.capacity(l);
      const bool p_full = of_p.size() == instance.capacity(p);
      auto prefers_to_someone = [&](const std::vector<StudentId>& group) {
        return std::any_of(group.begin(), group.end(), [&](StudentId t) {
          return PositionIn(lecturer_list, s) < PositionIn(lecturer_list, t);
        });
      };
      const bool in_l =
          std::find(of_l.begin(), of_l.end(), s) != of_l.end();

      std::optional<ProjectCondition> pc;
      if (p_under && l_under) {
        pc = ProjectCondition::kP1;
      } else if (p_under && l_full && in_l) {
        pc = ProjectCondition::kP2;
      } else if (p_under && l_full && prefers_to_someone(of_l)) {
        pc = ProjectCondition::kP3;
      } else if (p_full && prefers_to_someone(of_p)) {
        pc = ProjectCondition::kP4;
      }
      if (pc) out.push_back({s, p, sc, *pc});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(x.student, x.project) < std::pair(y.student, y.project);
  });
  return out;
}

StableSet brute_force_stable(const Instance& instance) {
  const std::size_t n = instance.num_students();
  std::vector<std::size_t> choice(n, 0);  // 0 = unassigned, k = k-th project
  std::vector<Matching> found;
  while (true) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (choice[i] > 0) {
        a[i] = instance.preferences(StudentId(static_cast<std::uint32_t>(i)))
                   [choice[i] - 1];
      }
    }
    if (FitsCapacities(instance, a) && naive_blocking_pairs(instance, a).empty()) {
      found.push_back(Matching::FromAssignment(a));
    }
    // Odometer increment.
    std::size_t i = 0;
    for (; i < n; ++i) {
      const std::size_t len =
          instance.preferences(StudentId(static_cast<std::uint32_t>(i))).size();
      if (++choice[i] <= len) break;
      choice[i] = 0;
    }
    if (i == n) break;
  }
  return StableSet(std::move(found));
}

namespace {

Matching Columnwise(const Instance& instance, const StableSet& set,
                    bool best) {
  Assignment out(instance.num_students());
  for (std::uint32_t i = 0; i < instance.num_students(); ++i) {
    const StudentId s(i);
    const auto list = instance.preferences(s);
    bool first = true;
    for (const Matching& m : set) {
      const auto p = m.project_of(s);
      if (first) {
        out[i] = p;
        first = false;
        continue;
      }
      // Unassigned students are unassigned in every member, so both sides
      // are set here whenever either is.
      if (!p || !out[i]) continue;
      const bool better = PositionIn(list, *p) < PositionIn(list, *out[i]);
      if (better == best) out[i] = p;
    }
  }
  return Matching::FromAssignment(out);
}

}  // namespace

Matching columnwise_best(const Instance& instance, const StableSet& set) {
  return Columnwise(instance, set, true);
}

Matching columnwise_worst(const Instance& instance, const StableSet& set) {
  return Columnwise(instance, set, false);
}

}  // namespace spas::testing
