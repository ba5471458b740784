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

// Orders on stable matchings and the lattice operations over them.
//
// Student-oriented dominance: M dominates M' when every student either
// prefers M(s) to M'(s) or is indifferent (same project, or unassigned in
// both). Lecturer-oriented dominance compares, per lecturer, the students
// they gain and lose in preference order. Meet gives every student the better
// of their two projects; join gives the worse. On stable inputs all of these
// are stable, and the stable matchings form a distributive lattice.

#ifndef SPAS_LATTICE_H_
#define SPAS_LATTICE_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spas/enumeration.h"
#include "spas/ids.h"
#include "spas/instance.h"
#include "spas/matching.h"

namespace spas {

// kRequireStable throws UnstableInputError on unstable arguments. kUnchecked
// skips the stability test; it is meant for oracle tests and for callers that
// already hold enumerated matchings.
enum class InputCheck { kRequireStable, kUnchecked };

enum class LecturerComparison {
  kPrefersFirst,
  kPrefersSecond,
  kIndifferent,
  kIncomparable,
};

std::string to_string(LecturerComparison c);

bool student_dominates(const Instance& instance, const Matching& m,
                       const Matching& other,
                       InputCheck check = InputCheck::kRequireStable);

// How lecturer `l` ranks `m` against `other`. The students of l only in m
// and only in other are listed in l's order and compared position by
// position. Throws UnstableInputError when the two lists differ in length,
// which cannot happen for stable inputs.
LecturerComparison lecturer_compare(
    const Instance& instance, LecturerId l, const Matching& m,
    const Matching& other, InputCheck check = InputCheck::kRequireStable);

bool lecturer_dominates(const Instance& instance, const Matching& m,
                        const Matching& other,
                        InputCheck check = InputCheck::kRequireStable);

Matching meet(const Instance& instance, const Matching& m,
              const Matching& other,
              InputCheck check = InputCheck::kRequireStable);
Matching join(const Instance& instance, const Matching& m,
              const Matching& other,
              InputCheck check = InputCheck::kRequireStable);

// Left folds of meet/join. Throw spas::Error on an empty range.
Matching meet_all(const Instance& instance, std::span<const Matching> set,
                  InputCheck check = InputCheck::kRequireStable);
Matching join_all(const Instance& instance, std::span<const Matching> set,
                  InputCheck check = InputCheck::kRequireStable);

inline Matching meet_all(const Instance& instance, const StableSet& set,
                         InputCheck check = InputCheck::kRequireStable) {
  return meet_all(instance, set.members(), check);
}
inline Matching join_all(const Instance& instance, const StableSet& set,
                         InputCheck check = InputCheck::kRequireStable) {
  return join_all(instance, set.members(), check);
}

// Transitive reduction of student-oriented dominance over a stable set.
// Node i is set[i]; an edge (i, j) means set[i] dominates set[j] with no
// member strictly between them. Edges are sorted.
class HasseDiagram {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  HasseDiagram(StableSet nodes, std::vector<Edge> edges);

  const StableSet& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Nodes without incoming (sources) or outgoing (sinks) edges.
  std::vector<std::size_t> sources() const;
  std::vector<std::size_t> sinks() const;

 private:
  StableSet nodes_;
  std::vector<Edge> edges_;
};

// Members of `set` are trusted to be stable (use enumerate_all()).
HasseDiagram build_hasse(const Instance& instance, const StableSet& set);

}  // namespace spas

#endif  // SPAS_LATTICE_H_
