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

#include "spas/solvers.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "spas/lattice.h"

namespace spas {

std::string to_string(SolveMethod method) {
  return method == SolveMethod::kEnumerationExtremum ? "enum" : "da";
}

std::optional<SolveMethod> parse_solve_method(std::string_view text) {
  if (text == "enum") return SolveMethod::kEnumerationExtremum;
  if (text == "da") return SolveMethod::kDeferredAcceptance;
  return std::nullopt;
}

namespace {

// Provisional assignment shared by both proposal algorithms, with per-pair
// deletion flags that shrink student lists and projected lecturer lists.
class Provisional {
 public:
  explicit Provisional(const Instance& instance)
      : inst_(instance),
        deleted_(instance.num_students() * instance.num_projects(), false),
        student_(instance.num_students()),
        project_(instance.num_projects()),
        lecturer_(instance.num_lecturers()) {}

  const Instance& instance() const { return inst_; }

  bool deleted(StudentId s, ProjectId p) const {
    return deleted_[s.index() * inst_.num_projects() + p.index()];
  }
  void Delete(StudentId s, ProjectId p) {
    deleted_[s.index() * inst_.num_projects() + p.index()] = true;
  }

  std::optional<ProjectId> assigned(StudentId s) const {
    return student_[s.index()];
  }
  const std::vector<StudentId>& members(ProjectId p) const {
    return project_[p.index()];
  }
  const std::vector<StudentId>& members(LecturerId l) const {
    return lecturer_[l.index()];
  }

  void Assign(StudentId s, ProjectId p) {
    student_[s.index()] = p;
    project_[p.index()].push_back(s);
    lecturer_[inst_.lecturer_of(p).index()].push_back(s);
  }

  void Unassign(StudentId s) {
    const ProjectId p = *student_[s.index()];
    student_[s.index()].reset();
    Erase(project_[p.index()], s);
    Erase(lecturer_[inst_.lecturer_of(p).index()], s);
  }

  StudentId Worst(LecturerId l, const std::vector<StudentId>& set) const {
    return *std::max_element(set.begin(), set.end(),
                             [&](StudentId a, StudentId b) {
                               return inst_.rank(l, a) < inst_.rank(l, b);
                             });
  }

  Matching ToMatching() const { return Matching::FromAssignment(student_); }

 private:
  static void Erase(std::vector<StudentId>& v, StudentId s) {
    v.erase(std::find(v.begin(), v.end(), s));
  }

  const Instance& inst_;
  std::vector<bool> deleted_;
  std::vector<std::optional<ProjectId>> student_;
  std::vector<std::vector<StudentId>> project_;
  std::vector<std::vector<StudentId>> lecturer_;
};

// Student-proposing. A free student applies to the first project left on
// their list; an oversubscribed project or lecturer rejects its worst
// student. Once a project (lecturer) is full, every pair with a student
// ranked below its worst member is deleted, since it can never be accepted.
Matching StudentProposing(const Instance& inst) {
  Provisional state(inst);
  std::deque<StudentId> free;
  for (std::uint32_t i = 0; i < inst.num_students(); ++i) {
    free.push_back(StudentId(i));
  }
  std::vector<std::size_t> project_mark(inst.num_projects());
  for (std::uint32_t j = 0; j < inst.num_projects(); ++j) {
    project_mark[j] = inst.projected_preferences(ProjectId(j)).size();
  }
  std::vector<std::size_t> lecturer_mark(inst.num_lecturers());
  for (std::uint32_t k = 0; k < inst.num_lecturers(); ++k) {
    lecturer_mark[k] = inst.preferences(LecturerId(k)).size();
  }
  auto first_alive = [&](StudentId s) -> std::optional<ProjectId> {
    for (ProjectId p : inst.preferences(s)) {
      if (!state.deleted(s, p)) return p;
    }
    return std::nullopt;
  };
  while (!free.empty()) {
    const StudentId s = free.front();
    free.pop_front();
    const auto next = first_alive(s);
    if (!next) continue;
    const ProjectId p = *next;
    const LecturerId l = inst.lecturer_of(p);
    state.Assign(s, p);
    if (state.members(p).size() > inst.capacity(p)) {
      const StudentId r = state.Worst(l, state.members(p));
      state.Unassign(r);
      free.push_back(r);
    } else if (state.members(l).size() > inst.capacity(l)) {
      const StudentId r = state.Worst(l, state.members(l));
      state.Unassign(r);
      free.push_back(r);
    }
    // Each list is cut back from a watermark: entries past it are already
    // deleted, and every member sits before it, so the walk stops at the
    // current worst member and the total work per list is linear.
    if (state.members(p).size() == inst.capacity(p)) {
      const StudentId worst = state.Worst(l, state.members(p));
      const auto list = inst.projected_preferences(p);
      std::size_t& mark = project_mark[p.index()];
      while (list[mark - 1] != worst) state.Delete(list[--mark], p);
    }
    if (state.members(l).size() == inst.capacity(l)) {
      const StudentId worst = state.Worst(l, state.members(l));
      const auto list = inst.preferences(l);
      std::size_t& mark = lecturer_mark[l.index()];
      while (list[mark - 1] != worst) {
        const StudentId t = list[--mark];
        for (ProjectId q : inst.preferences(t)) {
          if (inst.lecturer_of(q) == l) state.Delete(t, q);
        }
      }
    }
    // A rejected student whose list shrank may already be empty; the
    // front-of-queue check handles that.
  }
  return state.ToMatching();
}

// Lecturer-proposing. An undersubscribed lecturer offers the first student
// on their list who has an undersubscribed project of theirs still on the
// student's list, and is not already on it; the student takes the first
// such project, dropping their current one. Everything the student ranks
// below the new project is deleted, so students only move up.
Matching LecturerProposing(const Instance& inst) {
  Provisional state(inst);
  auto offer_for = [&](LecturerId l,
                       StudentId s) -> std::optional<ProjectId> {
    for (ProjectId p : inst.preferences(s)) {
      if (state.deleted(s, p)) continue;
      if (inst.lecturer_of(p) != l) continue;
      if (state.assigned(s) == p) continue;
      if (state.members(p).size() < inst.capacity(p)) return p;
    }
    return std::nullopt;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::uint32_t k = 0; k < inst.num_lecturers() && !progress; ++k) {
      const LecturerId l(k);
      if (state.members(l).size() >= inst.capacity(l)) continue;
      for (StudentId s : inst.preferences(l)) {
        const auto p = offer_for(l, s);
        if (!p) continue;
        if (state.assigned(s)) state.Unassign(s);
        state.Assign(s, *p);
        const auto prefs = inst.preferences(s);
        auto it = std::find(prefs.begin(), prefs.end(), *p);
        for (++it; it != prefs.end(); ++it) state.Delete(s, *it);
        progress = true;
        break;
      }
    }
  }
  return state.ToMatching();
}

}  // namespace

Matching solve_student_optimal(const Instance& instance, SolveMethod method,
                               const EnumerateOptions& options) {
  if (method == SolveMethod::kDeferredAcceptance) {
    return StudentProposing(instance);
  }
  return meet_all(instance, enumerate_all(instance, options),
                  InputCheck::kUnchecked);
}

Matching solve_lecturer_optimal(const Instance& instance, SolveMethod method,
                                const EnumerateOptions& options) {
  if (method == SolveMethod::kDeferredAcceptance) {
    return LecturerProposing(instance);
  }
  return join_all(instance, enumerate_all(instance, options),
                  InputCheck::kUnchecked);
}

}  // namespace spas
