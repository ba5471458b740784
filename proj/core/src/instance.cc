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

#include "spas/instance.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "spas/errors.h"

namespace spas {

void InstanceDescription::resize() {
  student_preferences.resize(num_students);
  projects.resize(num_projects);
  lecturers.resize(num_lecturers);
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::kSyntax:
      return "syntax";
    case Rule::kShape:
      return "shape";
    case Rule::kNonPositiveCapacity:
      return "non-positive-capacity";
    case Rule::kCapacityBound:
      return "capacity-bound";
    case Rule::kPartition:
      return "partition";
    case Rule::kDanglingIdentifier:
      return "dangling-identifier";
    case Rule::kDuplicateEntry:
      return "duplicate-entry";
    case Rule::kLecturerListMismatch:
      return "lecturer-list-mismatch";
    case Rule::kEmptyPreferenceList:
      return "empty-preference-list";
    case Rule::kMultipleAssignment:
      return "multiple-assignment";
    case Rule::kUnacceptablePair:
      return "unacceptable-pair";
    case Rule::kProjectOverCapacity:
      return "project-over-capacity";
    case Rule::kLecturerOverCapacity:
      return "lecturer-over-capacity";
  }
  return "unknown";
}

bool ValidationReport::has_error(Rule rule) const {
  return std::any_of(errors.begin(), errors.end(),
                     [rule](const Violation& v) { return v.rule == rule; });
}

std::string describe(const ValidationReport& report) {
  std::ostringstream out;
  auto emit = [&out](const char* level, const Violation& v) {
    out << level << " [" << to_string(v.rule) << "]";
    for (const auto& subject : v.subjects) out << ' ' << subject;
    out << ": " << v.message << '\n';
  };
  for (const auto& v : report.errors) emit("error", v);
  for (const auto& v : report.warnings) emit("warning", v);
  return out.str();
}

struct InstanceBuilder {
  static Instance Build(InstanceDescription d) {
    Instance inst;
    const std::size_t n1 = d.num_students;
    const std::size_t n2 = d.num_projects;
    const std::size_t n3 = d.num_lecturers;
    inst.student_prefs_ = d.student_preferences;
    inst.lecturer_prefs_.resize(n3);
    inst.lecturer_capacity_.resize(n3);
    inst.offered_.resize(n3);
    for (std::size_t k = 0; k < n3; ++k) {
      inst.lecturer_prefs_[k] = d.lecturers[k].preferences;
      inst.lecturer_capacity_[k] = d.lecturers[k].capacity;
    }
    inst.owner_.resize(n2);
    inst.project_capacity_.resize(n2);
    for (std::size_t j = 0; j < n2; ++j) {
      inst.owner_[j] = *d.projects[j].lecturer;
      inst.project_capacity_[j] = d.projects[j].capacity;
      inst.offered_[inst.owner_[j].index()].push_back(
          ProjectId(static_cast<std::uint32_t>(j)));
    }
    inst.student_rank_.assign(n1 * n2, Instance::kUnranked);
    for (std::size_t i = 0; i < n1; ++i) {
      const auto& prefs = inst.student_prefs_[i];
      for (std::size_t r = 0; r < prefs.size(); ++r) {
        inst.student_rank_[i * n2 + prefs[r].index()] =
            static_cast<std::uint32_t>(r);
      }
    }
    inst.lecturer_rank_.assign(n3 * n1, Instance::kUnranked);
    for (std::size_t k = 0; k < n3; ++k) {
      const auto& prefs = inst.lecturer_prefs_[k];
      for (std::size_t r = 0; r < prefs.size(); ++r) {
        inst.lecturer_rank_[k * n1 + prefs[r].index()] =
            static_cast<std::uint32_t>(r);
      }
    }
    inst.projected_.resize(n2);
    for (std::size_t j = 0; j < n2; ++j) {
      const ProjectId p(static_cast<std::uint32_t>(j));
      for (StudentId s : inst.lecturer_prefs_[inst.owner_[j].index()]) {
        if (inst.rank(s, p) != Instance::kUnranked) {
          inst.projected_[j].push_back(s);
        }
      }
    }
    inst.description_ = std::move(d);
    return inst;
  }
};

namespace {

class Validator {
 public:
  explicit Validator(const InstanceDescription& d) : d_(d) {}

  ValidationReport Run() {
    if (!CheckShape()) return std::move(report_);
    CheckStudents();
    CheckProjects();
    CheckLecturers();
    CheckLecturerLists();
    return std::move(report_);
  }

 private:
  void Error(Rule rule, std::vector<std::string> subjects,
             std::string message) {
    report_.errors.push_back({rule, std::move(subjects), std::move(message)});
  }

  bool CheckShape() {
    bool ok = true;
    auto expect = [&](std::size_t got, std::size_t want, const char* what) {
      if (got != want) {
        Error(Rule::kShape, {},
              std::string(what) + " has " + std::to_string(got) +
                  " entries but the header declares " + std::to_string(want));
        ok = false;
      }
    };
    expect(d_.student_preferences.size(), d_.num_students, "student list");
    expect(d_.projects.size(), d_.num_projects, "project list");
    expect(d_.lecturers.size(), d_.num_lecturers, "lecturer list");
    return ok;
  }

  void CheckStudents() {
    for (std::size_t i = 0; i < d_.num_students; ++i) {
      const StudentId s(static_cast<std::uint32_t>(i));
      const auto& prefs = d_.student_preferences[i];
      if (prefs.empty()) {
        report_.warnings.push_back(
            {Rule::kEmptyPreferenceList,
             {to_string(s)},
             "student finds no project acceptable and stays unassigned"});
      }
      std::vector<bool> seen(d_.num_projects, false);
      for (ProjectId p : prefs) {
        if (p.index() >= d_.num_projects) {
          Error(Rule::kDanglingIdentifier, {to_string(s), to_string(p)},
                "student ranks a project that does not exist");
        } else if (seen[p.index()]) {
          Error(Rule::kDuplicateEntry, {to_string(s), to_string(p)},
                "project appears more than once on the student's list");
        } else {
          seen[p.index()] = true;
        }
      }
    }
  }

  void CheckProjects() {
    for (std::size_t j = 0; j < d_.num_projects; ++j) {
      const ProjectId p(static_cast<std::uint32_t>(j));
      const auto& spec = d_.projects[j];
      if (spec.capacity == 0) {
        Error(Rule::kNonPositiveCapacity, {to_string(p)},
              "project capacity must be a positive integer");
      }
      if (!spec.lecturer) {
        Error(Rule::kPartition, {to_string(p)},
              "project is not offered by any lecturer");
      } else if (spec.lecturer->index() >= d_.num_lecturers) {
        Error(Rule::kDanglingIdentifier,
              {to_string(p), to_string(*spec.lecturer)},
              "project is offered by a lecturer that does not exist");
      }
    }
  }

  bool OwnedBy(std::size_t j, std::size_t k) const {
    const auto& owner = d_.projects[j].lecturer;
    return owner && owner->index() == k;
  }

  void CheckLecturers() {
    for (std::size_t k = 0; k < d_.num_lecturers; ++k) {
      const LecturerId l(static_cast<std::uint32_t>(k));
      const auto& spec = d_.lecturers[k];
      std::uint32_t max_cap = 0;
      std::uint64_t sum_cap = 0;
      std::size_t offered = 0;
      for (std::size_t j = 0; j < d_.num_projects; ++j) {
        if (!OwnedBy(j, k)) continue;
        ++offered;
        max_cap = std::max(max_cap, d_.projects[j].capacity);
        sum_cap += d_.projects[j].capacity;
      }
      if (offered == 0) {
        Error(Rule::kPartition, {to_string(l)}, "lecturer offers no projects");
      } else if (spec.capacity < max_cap || spec.capacity > sum_cap) {
        Error(Rule::kCapacityBound, {to_string(l)},
              "lecturer capacity " + std::to_string(spec.capacity) +
                  " must lie in [" + std::to_string(max_cap) + ", " +
                  std::to_string(sum_cap) +
                  "], the largest and total capacity of the offered projects");
      }
      std::vector<bool> seen(d_.num_students, false);
      for (StudentId s : spec.preferences) {
        if (s.index() >= d_.num_students) {
          Error(Rule::kDanglingIdentifier, {to_string(l), to_string(s)},
                "lecturer ranks a student that does not exist");
        } else if (seen[s.index()]) {
          Error(Rule::kDuplicateEntry, {to_string(l), to_string(s)},
                "student appears more than once on the lecturer's list");
        } else {
          seen[s.index()] = true;
        }
      }
    }
  }

  // s is on l's list iff s finds some project of l acceptable.
  void CheckLecturerLists() {
    for (std::size_t k = 0; k < d_.num_lecturers; ++k) {
      const LecturerId l(static_cast<std::uint32_t>(k));
      std::vector<bool> listed(d_.num_students, false);
      for (StudentId s : d_.lecturers[k].preferences) {
        if (s.index() < d_.num_students) listed[s.index()] = true;
      }
      for (std::size_t i = 0; i < d_.num_students; ++i) {
        const StudentId s(static_cast<std::uint32_t>(i));
        bool interested = false;
        for (ProjectId p : d_.student_preferences[i]) {
          if (p.index() < d_.num_projects && OwnedBy(p.index(), k)) {
            interested = true;
            break;
          }
        }
        if (interested && !listed[i]) {
          Error(Rule::kLecturerListMismatch, {to_string(l), to_string(s)},
                "student finds a project of this lecturer acceptable but is "
                "missing from the lecturer's list");
        } else if (!interested && listed[i]) {
          Error(Rule::kLecturerListMismatch, {to_string(l), to_string(s)},
                "lecturer ranks a student who finds none of their projects "
                "acceptable");
        }
      }
    }
  }

  const InstanceDescription& d_;
  ValidationReport report_;
};

}  // namespace

BuildResult build_instance(InstanceDescription description) {
  BuildResult result;
  result.report = Validator(description).Run();
  if (result.report.ok()) {
    result.instance = InstanceBuilder::Build(std::move(description));
  }
  return result;
}

Instance build_instance_or_throw(InstanceDescription description) {
  BuildResult result = build_instance(std::move(description));
  if (!result) throw Error("invalid instance:\n" + describe(result.report));
  return std::move(*result.instance);
}

bool acceptable_pair(const Instance& instance, StudentId s, ProjectId p) {
  if (!instance.contains(s) || !instance.contains(p)) {
    throw UnknownIdentifierError("unknown identifier " + to_string(s) + " or " +
                                 to_string(p));
  }
  return instance.rank(s, p) != Instance::kUnranked;
}

std::vector<StudentId> projected_list(const Instance& instance, LecturerId l,
                                      ProjectId p) {
  if (!instance.contains(l) || !instance.contains(p)) {
    throw UnknownIdentifierError("unknown identifier " + to_string(l) + " or " +
                                 to_string(p));
  }
  if (instance.lecturer_of(p) != l) {
    throw Error(to_string(p) + " is not offered by " + to_string(l));
  }
  const auto list = instance.projected_preferences(p);
  return {list.begin(), list.end()};
}

}  // namespace spas
