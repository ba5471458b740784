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

#ifndef SPAS_MATCHING_H_
#define SPAS_MATCHING_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spas/ids.h"
#include "spas/instance.h"

namespace spas {

// A set of (student, project) pairs kept sorted by (student, project), so
// equal sets compare and hash equal however they were built. Whether the
// pairs form a valid matching for an instance is checked separately by
// validate_matching().
class Matching {
 public:
  using Pair = std::pair<StudentId, ProjectId>;

  Matching() = default;
  explicit Matching(std::vector<Pair> pairs);

  // Entry i is student i's project; nullopt means unassigned.
  static Matching FromAssignment(
      std::span<const std::optional<ProjectId>> assignment);

  std::span<const Pair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(StudentId s, ProjectId p) const;

  // First project paired with `s`, if any.
  std::optional<ProjectId> project_of(StudentId s) const;

  // Per-student assignment vector of the given length.
  std::vector<std::optional<ProjectId>> assignment(
      std::size_t num_students) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  // Lexicographic on the canonical pair lists.
  friend auto operator<=>(const Matching& a, const Matching& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  std::vector<Pair> pairs_;
};

std::size_t hash_value(const Matching& m);

// Checks that every student has at most one project, every pair is
// acceptable, and no project or lecturer exceeds its capacity.
ValidationReport validate_matching(const Instance& instance, const Matching& m);

// Derived per-agent views of a valid matching. Holds a reference to the
// instance, which must outlive the view.
class MatchingView {
 public:
  // Throws InvalidMatchingError if `m` is not a valid matching of `instance`.
  MatchingView(const Instance& instance, const Matching& m);

  const Instance& instance() const { return *instance_; }

  std::optional<ProjectId> assigned(StudentId s) const;
  // Student sets in ascending student order.
  std::span<const StudentId> assigned(ProjectId p) const;
  std::span<const StudentId> assigned(LecturerId l) const;

  bool is_assigned(StudentId s) const { return assigned(s).has_value(); }
  bool is_assigned_to(StudentId s, LecturerId l) const;

  std::size_t count(ProjectId p) const { return assigned(p).size(); }
  std::size_t count(LecturerId l) const { return assigned(l).size(); }
  bool undersubscribed(ProjectId p) const {
    return count(p) < instance_->capacity(p);
  }
  bool undersubscribed(LecturerId l) const {
    return count(l) < instance_->capacity(l);
  }
  bool full(ProjectId p) const { return count(p) == instance_->capacity(p); }
  bool full(LecturerId l) const { return count(l) == instance_->capacity(l); }

  // Assigned student ranked lowest by the lecturer (for a project, by its
  // owner, i.e. by the projected list). nullopt if nobody is assigned.
  std::optional<StudentId> worst_assigned(LecturerId l) const;
  std::optional<StudentId> worst_assigned(ProjectId p) const;

 private:
  std::optional<StudentId> WorstOf(LecturerId l,
                                   std::span<const StudentId> students) const;

  const Instance* instance_;
  std::vector<std::optional<ProjectId>> student_;
  std::vector<std::vector<StudentId>> project_;
  std::vector<std::vector<StudentId>> lecturer_;
};

// Throws UnknownIdentifierError when the id is out of range.
void require_known(const Instance& instance, StudentId s);
void require_known(const Instance& instance, ProjectId p);
void require_known(const Instance& instance, LecturerId l);

}  // namespace spas

template <>
struct std::hash<spas::Matching> {
  std::size_t operator()(const spas::Matching& m) const noexcept {
    return spas::hash_value(m);
  }
};

#endif  // SPAS_MATCHING_H_
