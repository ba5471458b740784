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

#include "spas/matching.h"

#include <algorithm>
#include <string>

#include "spas/errors.h"

namespace spas {

Matching::Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Matching Matching::FromAssignment(
    std::span<const std::optional<ProjectId>> assignment) {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i]) {
      pairs.emplace_back(StudentId(static_cast<std::uint32_t>(i)),
                         *assignment[i]);
    }
  }
  Matching m;
  m.pairs_ = std::move(pairs);  // already canonical
  return m;
}

bool Matching::contains(StudentId s, ProjectId p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{s, p});
}

std::optional<ProjectId> Matching::project_of(StudentId s) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), s,
      [](const Pair& pair, StudentId id) { return pair.first < id; });
  if (it == pairs_.end() || it->first != s) return std::nullopt;
  return it->second;
}

std::vector<std::optional<ProjectId>> Matching::assignment(
    std::size_t num_students) const {
  std::vector<std::optional<ProjectId>> out(num_students);
  for (const auto& [s, p] : pairs_) {
    if (s.index() < num_students && !out[s.index()]) out[s.index()] = p;
  }
  return out;
}

std::size_t hash_value(const Matching& m) {
  // FNV-1a over the canonical pair list.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& [s, p] : m.pairs()) {
    mix(s.index());
    mix(p.index());
  }
  return static_cast<std::size_t>(h);
}

void require_known(const Instance& instance, StudentId s) {
  if (!instance.contains(s)) {
    throw UnknownIdentifierError("unknown student " + to_string(s));
  }
}

void require_known(const Instance& instance, ProjectId p) {
  if (!instance.contains(p)) {
    throw UnknownIdentifierError("unknown project " + to_string(p));
  }
}

void require_known(const Instance& instance, LecturerId l) {
  if (!instance.contains(l)) {
    throw UnknownIdentifierError("unknown lecturer " + to_string(l));
  }
}

ValidationReport validate_matching(const Instance& instance,
                                   const Matching& m) {
  ValidationReport report;
  std::vector<std::size_t> per_student(instance.num_students(), 0);
  std::vector<std::size_t> per_project(instance.num_projects(), 0);
  std::vector<std::size_t> per_lecturer(instance.num_lecturers(), 0);
  for (const auto& [s, p] : m.pairs()) {
    if (!instance.contains(s) || !instance.contains(p)) {
      report.errors.push_back({Rule::kDanglingIdentifier,
                               {to_string(s), to_string(p)},
                               "pair refers to an unknown student or project"});
      continue;
    }
    if (instance.rank(s, p) == Instance::kUnranked) {
      report.errors.push_back({Rule::kUnacceptablePair,
                               {to_string(s), to_string(p)},
                               "student does not find the project acceptable"});
    }
    ++per_student[s.index()];
    ++per_project[p.index()];
    ++per_lecturer[instance.lecturer_of(p).index()];
  }
  for (std::size_t i = 0; i < per_student.size(); ++i) {
    if (per_student[i] > 1) {
      report.errors.push_back(
          {Rule::kMultipleAssignment,
           {to_string(StudentId(static_cast<std::uint32_t>(i)))},
           "student is assigned to " + std::to_string(per_student[i]) +
               " projects"});
    }
  }
  for (std::size_t j = 0; j < per_project.size(); ++j) {
    const ProjectId p(static_cast<std::uint32_t>(j));
    if (per_project[j] > instance.capacity(p)) {
      report.errors.push_back(
          {Rule::kProjectOverCapacity,
           {to_string(p)},
           std::to_string(per_project[j]) + " students exceed capacity " +
               std::to_string(instance.capacity(p))});
    }
  }
  for (std::size_t k = 0; k < per_lecturer.size(); ++k) {
    const LecturerId l(static_cast<std::uint32_t>(k));
    if (per_lecturer[k] > instance.capacity(l)) {
      report.errors.push_back(
          {Rule::kLecturerOverCapacity,
           {to_string(l)},
           std::to_string(per_lecturer[k]) + " students exceed capacity " +
               std::to_string(instance.capacity(l))});
    }
  }
  return report;
}

MatchingView::MatchingView(const Instance& instance, const Matching& m)
    : instance_(&instance),
      student_(instance.num_students()),
      project_(instance.num_projects()),
      lecturer_(instance.num_lecturers()) {
  const ValidationReport report = validate_matching(instance, m);
  if (!report.ok()) {
    throw InvalidMatchingError("invalid matching:\n" + describe(report));
  }
  // Pairs are sorted by student, so every bucket ends up in ascending order.
  for (const auto& [s, p] : m.pairs()) {
    student_[s.index()] = p;
    project_[p.index()].push_back(s);
    lecturer_[instance.lecturer_of(p).index()].push_back(s);
  }
}

std::optional<ProjectId> MatchingView::assigned(StudentId s) const {
  require_known(*instance_, s);
  return student_[s.index()];
}

std::span<const StudentId> MatchingView::assigned(ProjectId p) const {
  require_known(*instance_, p);
  return project_[p.index()];
}

std::span<const StudentId> MatchingView::assigned(LecturerId l) const {
  require_known(*instance_, l);
  return lecturer_[l.index()];
}

bool MatchingView::is_assigned_to(StudentId s, LecturerId l) const {
  const auto p = assigned(s);
  return p && instance_->lecturer_of(*p) == l;
}

std::optional<StudentId> MatchingView::WorstOf(
    LecturerId l, std::span<const StudentId> students) const {
  if (students.empty()) return std::nullopt;
  return *std::max_element(students.begin(), students.end(),
                           [&](StudentId a, StudentId b) {
                             return instance_->rank(l, a) <
                                    instance_->rank(l, b);
                           });
}

std::optional<StudentId> MatchingView::worst_assigned(LecturerId l) const {
  return WorstOf(l, assigned(l));
}

std::optional<StudentId> MatchingView::worst_assigned(ProjectId p) const {
  return WorstOf(instance_->lecturer_of(p), assigned(p));
}

}  // namespace spas
