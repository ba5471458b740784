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

// Student-project allocation instances with lecturer preferences over
// students.
//
// An instance has students, projects and lecturers. Each student ranks a
// subset of projects in strict order. Each project has a capacity and is
// offered by exactly one lecturer. Each lecturer has a capacity lying between
// the largest capacity of their projects and the sum of those capacities, and
// ranks, in strict order, exactly the students who find at least one of their
// projects acceptable.

#ifndef SPAS_INSTANCE_H_
#define SPAS_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spas/ids.h"

namespace spas {

struct ProjectSpec {
  std::uint32_t capacity = 0;
  std::optional<LecturerId> lecturer;

  friend bool operator==(const ProjectSpec&, const ProjectSpec&) = default;
};

struct LecturerSpec {
  std::uint32_t capacity = 0;
  std::vector<StudentId> preferences;

  friend bool operator==(const LecturerSpec&, const LecturerSpec&) = default;
};

// Unvalidated instance data, as produced by a parser or by hand. Ids may be
// out of range here; build_instance() reports them.
struct InstanceDescription {
  std::size_t num_students = 0;
  std::size_t num_projects = 0;
  std::size_t num_lecturers = 0;
  std::vector<std::vector<ProjectId>> student_preferences;
  std::vector<ProjectSpec> projects;
  std::vector<LecturerSpec> lecturers;

  // Sizes every per-agent vector to match the counts.
  void resize();

  friend bool operator==(const InstanceDescription&,
                         const InstanceDescription&) = default;
};

enum class Rule {
  kSyntax,
  kShape,
  kNonPositiveCapacity,
  kCapacityBound,
  kPartition,
  kDanglingIdentifier,
  kDuplicateEntry,
  kLecturerListMismatch,
  kEmptyPreferenceList,
  kMultipleAssignment,
  kUnacceptablePair,
  kProjectOverCapacity,
  kLecturerOverCapacity,
};

std::string to_string(Rule rule);

struct Violation {
  Rule rule;
  std::vector<std::string> subjects;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// A list of violated rules. Warnings never make the subject invalid.
struct ValidationReport {
  std::vector<Violation> errors;
  std::vector<Violation> warnings;

  bool ok() const { return errors.empty(); }
  bool has_error(Rule rule) const;
};

// A validated, immutable instance with precomputed rank tables.
class Instance {
 public:
  static constexpr std::uint32_t kUnranked = UINT32_MAX;

  std::size_t num_students() const { return student_prefs_.size(); }
  std::size_t num_projects() const { return project_capacity_.size(); }
  std::size_t num_lecturers() const { return lecturer_capacity_.size(); }

  bool contains(StudentId s) const { return s.index() < num_students(); }
  bool contains(ProjectId p) const { return p.index() < num_projects(); }
  bool contains(LecturerId l) const { return l.index() < num_lecturers(); }

  std::span<const ProjectId> preferences(StudentId s) const {
    return student_prefs_[s.index()];
  }
  std::span<const StudentId> preferences(LecturerId l) const {
    return lecturer_prefs_[l.index()];
  }
  // Students of the owner's list who find `p` acceptable, in the owner's
  // order.
  std::span<const StudentId> projected_preferences(ProjectId p) const {
    return projected_[p.index()];
  }
  std::span<const ProjectId> projects_of(LecturerId l) const {
    return offered_[l.index()];
  }

  LecturerId lecturer_of(ProjectId p) const { return owner_[p.index()]; }
  std::uint32_t capacity(ProjectId p) const {
    return project_capacity_[p.index()];
  }
  std::uint32_t capacity(LecturerId l) const {
    return lecturer_capacity_[l.index()];
  }

  // 0-based position in the list, or kUnranked. No bounds checks.
  std::uint32_t rank(StudentId s, ProjectId p) const {
    return student_rank_[s.index() * num_projects() + p.index()];
  }
  std::uint32_t rank(LecturerId l, StudentId s) const {
    return lecturer_rank_[l.index() * num_students() + s.index()];
  }

  // Strict preference; both arguments must be ranked.
  bool prefers(StudentId s, ProjectId a, ProjectId b) const {
    return rank(s, a) < rank(s, b);
  }
  bool prefers(LecturerId l, StudentId a, StudentId b) const {
    return rank(l, a) < rank(l, b);
  }

  const InstanceDescription& description() const { return description_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.description_ == b.description_;
  }

 private:
  friend struct InstanceBuilder;
  Instance() = default;

  InstanceDescription description_;
  std::vector<std::vector<ProjectId>> student_prefs_;
  std::vector<std::vector<StudentId>> lecturer_prefs_;
  std::vector<std::vector<StudentId>> projected_;
  std::vector<std::vector<ProjectId>> offered_;
  std::vector<LecturerId> owner_;
  std::vector<std::uint32_t> project_capacity_;
  std::vector<std::uint32_t> lecturer_capacity_;
  std::vector<std::uint32_t> student_rank_;
  std::vector<std::uint32_t> lecturer_rank_;
};

struct BuildResult {
  std::optional<Instance> instance;
  ValidationReport report;

  explicit operator bool() const { return instance.has_value(); }
};

// Validates a description and, when every rule holds, builds the instance.
// Every violated rule is reported, not only the first.
BuildResult build_instance(InstanceDescription description);

// Like build_instance() but throws spas::Error listing the violations.
Instance build_instance_or_throw(InstanceDescription description);

// True iff `p` is on the student's list. Throws UnknownIdentifierError.
bool acceptable_pair(const Instance& instance, StudentId s, ProjectId p);

// The lecturer's list restricted to students who find `p` acceptable. Throws
// UnknownIdentifierError, or spas::Error if `l` does not offer `p`.
std::vector<StudentId> projected_list(const Instance& instance, LecturerId l,
                                      ProjectId p);

std::string describe(const ValidationReport& report);

}  // namespace spas

#endif  // SPAS_INSTANCE_H_
