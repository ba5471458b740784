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

#include "spas/lattice.h"

#include <algorithm>
#include <optional>

#include "spas/errors.h"
#include "spas/stability.h"

namespace spas {

std::string to_string(LecturerComparison c) {
  switch (c) {
    case LecturerComparison::kPrefersFirst:
      return "prefers-first";
    case LecturerComparison::kPrefersSecond:
      return "prefers-second";
    case LecturerComparison::kIndifferent:
      return "indifferent";
    case LecturerComparison::kIncomparable:
      return "incomparable";
  }
  return "?";
}

namespace {

using Assignment = std::vector<std::optional<ProjectId>>;

void Admit(const Instance& instance, const Matching& m, InputCheck check) {
  const ValidationReport report = validate_matching(instance, m);
  if (!report.ok()) {
    throw InvalidMatchingError("invalid matching:\n" + describe(report));
  }
  if (check == InputCheck::kRequireStable && !is_stable(instance, m)) {
    throw UnstableInputError("operation requires a stable matching");
  }
}

// Ranks of each student's project, kUnranked for unassigned.
std::vector<std::uint32_t> RankVector(const Instance& instance,
                                      const Matching& m) {
  std::vector<std::uint32_t> ranks(instance.num_students(),
                                   Instance::kUnranked);
  for (const auto& [s, p] : m.pairs()) ranks[s.index()] = instance.rank(s, p);
  return ranks;
}

// Every student is indifferent or strictly better off in `a`.
bool Dominates(const std::vector<std::uint32_t>& a,
               const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i] == Instance::kUnranked || b[i] == Instance::kUnranked) {
      return false;
    }
    if (a[i] > b[i]) return false;
  }
  return true;
}

enum class Pick { kBetter, kWorse };

Matching Combine(const Instance& instance, const Matching& m,
                 const Matching& other, Pick pick) {
  const std::size_t n = instance.num_students();
  const Assignment a = m.assignment(n);
  const Assignment b = other.assignment(n);
  Assignment out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!a[i] || !b[i]) {
      out[i] = a[i] ? a[i] : b[i];
      continue;
    }
    const bool a_better = instance.rank(StudentId(i), *a[i]) <=
                          instance.rank(StudentId(i), *b[i]);
    out[i] = (a_better == (pick == Pick::kBetter)) ? a[i] : b[i];
  }
  return Matching::FromAssignment(out);
}

std::vector<StudentId> StudentsOf(const Instance& instance, LecturerId l,
                                  const Matching& m) {
  std::vector<StudentId> out;
  for (const auto& [s, p] : m.pairs()) {
    if (instance.lecturer_of(p) == l) out.push_back(s);
  }
  return out;
}

}  // namespace

bool student_dominates(const Instance& instance, const Matching& m,
                       const Matching& other, InputCheck check) {
  Admit(instance, m, check);
  Admit(instance, other, check);
  return Dominates(RankVector(instance, m), RankVector(instance, other));
}

LecturerComparison lecturer_compare(const Instance& instance, LecturerId l,
                                    const Matching& m, const Matching& other,
                                    InputCheck check) {
  require_known(instance, l);
  Admit(instance, m, check);
  Admit(instance, other, check);
  const std::vector<StudentId> mine = StudentsOf(instance, l, m);
  const std::vector<StudentId> theirs = StudentsOf(instance, l, other);
  std::vector<StudentId> only_first;
  std::vector<StudentId> only_second;
  std::set_difference(mine.begin(), mine.end(), theirs.begin(), theirs.end(),
                      std::back_inserter(only_first));
  std::set_difference(theirs.begin(), theirs.end(), mine.begin(), mine.end(),
                      std::back_inserter(only_second));
  if (only_first.empty() && only_second.empty()) {
    return LecturerComparison::kIndifferent;
  }
  if (only_first.size() != only_second.size()) {
    throw UnstableInputError(to_string(l) +
                             " is assigned different numbers of students; "
                             "the matchings cannot both be stable");
  }
  auto by_rank = [&](StudentId a, StudentId b) {
    return instance.rank(l, a) < instance.rank(l, b);
  };
  std::sort(only_first.begin(), only_first.end(), by_rank);
  std::sort(only_second.begin(), only_second.end(), by_rank);
  bool first_wins = true;
  bool second_wins = true;
  for (std::size_t i = 0; i < only_first.size(); ++i) {
    if (instance.prefers(l, only_first[i], only_second[i])) {
      second_wins = false;
    } else {
      first_wins = false;
    }
  }
  if (first_wins) return LecturerComparison::kPrefersFirst;
  if (second_wins) return LecturerComparison::kPrefersSecond;
  return LecturerComparison::kIncomparable;
}

bool lecturer_dominates(const Instance& instance, const Matching& m,
                        const Matching& other, InputCheck check) {
  Admit(instance, m, check);
  Admit(instance, other, check);
  for (std::uint32_t k = 0; k < instance.num_lecturers(); ++k) {
    const LecturerComparison c = lecturer_compare(
        instance, LecturerId(k), m, other, InputCheck::kUnchecked);
    if (c != LecturerComparison::kPrefersFirst &&
        c != LecturerComparison::kIndifferent) {
      return false;
    }
  }
  return true;
}

Matching meet(const Instance& instance, const Matching& m,
              const Matching& other, InputCheck check) {
  Admit(instance, m, check);
  Admit(instance, other, check);
  return Combine(instance, m, other, Pick::kBetter);
}

Matching join(const Instance& instance, const Matching& m,
              const Matching& other, InputCheck check) {
  Admit(instance, m, check);
  Admit(instance, other, check);
  return Combine(instance, m, other, Pick::kWorse);
}

Matching meet_all(const Instance& instance, std::span<const Matching> set,
                  InputCheck check) {
  if (set.empty()) throw Error("meet of an empty set of matchings");
  Admit(instance, set.front(), check);
  Matching acc = set.front();
  for (std::size_t i = 1; i < set.size(); ++i) {
    Admit(instance, set[i], check);
    acc = Combine(instance, acc, set[i], Pick::kBetter);
  }
  return acc;
}

Matching join_all(const Instance& instance, std::span<const Matching> set,
                  InputCheck check) {
  if (set.empty()) throw Error("join of an empty set of matchings");
  Admit(instance, set.front(), check);
  Matching acc = set.front();
  for (std::size_t i = 1; i < set.size(); ++i) {
    Admit(instance, set[i], check);
    acc = Combine(instance, acc, set[i], Pick::kWorse);
  }
  return acc;
}

HasseDiagram::HasseDiagram(StableSet nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

std::vector<std::size_t> HasseDiagram::sources() const {
  std::vector<bool> has_in(size(), false);
  for (const auto& [from, to] : edges_) has_in[to] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!has_in[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> HasseDiagram::sinks() const {
  std::vector<bool> has_out(size(), false);
  for (const auto& [from, to] : edges_) has_out[from] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!has_out[i]) out.push_back(i);
  }
  return out;
}

HasseDiagram build_hasse(const Instance& instance, const StableSet& set) {
  const std::size_t n = set.size();
  std::vector<std::vector<std::uint32_t>> ranks;
  ranks.reserve(n);
  for (const Matching& m : set) ranks.push_back(RankVector(instance, m));
  std::vector<std::vector<bool>> dom(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dom[i][j] = i != j && Dominates(ranks[i], ranks[j]);
    }
  }
  // The order is transitive, so any longer chain between i and j implies a
  // two-step one.
  std::vector<HasseDiagram::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!dom[i][j]) continue;
      bool covered = false;
      for (std::size_t k = 0; k < n && !covered; ++k) {
        covered = dom[i][k] && dom[k][j];
      }
      if (!covered) edges.emplace_back(i, j);
    }
  }
  return HasseDiagram(set, std::move(edges));
}

}  // namespace spas
