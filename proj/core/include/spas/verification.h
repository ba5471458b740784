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

// Executable structural properties of the set of stable matchings.
//
// Every check here works from rank queries on the Instance and plain set
// algebra on assignments. None of them calls into lattice.h, so a passing
// report is evidence independent of the lattice implementation.
//
// Each property is universal over tuples of matchings, so a counterexample
// lists the tuple that violates it and rerunning the same check on just
// those matchings fails again.

#ifndef SPAS_VERIFICATION_H_
#define SPAS_VERIFICATION_H_

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spas/enumeration.h"
#include "spas/instance.h"
#include "spas/matching.h"

namespace spas {

struct Counterexample {
  std::string detail;
  std::vector<Matching> matchings;
  std::vector<std::string> agents;
};

struct PropertyOutcome {
  std::string property;
  bool passed = true;
  // Number of tuples on which the property was evaluated.
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;
};

class PropertyReport {
 public:
  PropertyOutcome& add(std::string property);
  void merge(const PropertyReport& other);

  const std::deque<PropertyOutcome>& outcomes() const { return outcomes_; }
  const PropertyOutcome* find(const std::string& property) const;
  bool passed() const;

 private:
  // deque: add() hands out references that must survive later adds.
  std::deque<PropertyOutcome> outcomes_;
};

// Across the set: every lecturer has the same number of students, the same
// students are unassigned, and every project of a lecturer undersubscribed
// in some member has the same number of students.
PropertyReport check_unpopular_projects(const Instance& instance,
                                        const StableSet& set);

// If s holds p in m, prefers m to other, and either is one of p's lecturer's
// students in other or is ranked by that lecturer above one of them, then p
// is full in other.
PropertyReport check_prop_full_project(const Instance& instance,
                                       const Matching& m,
                                       const Matching& other);

// For s holding different projects of the same lecturer l in m and other and
// preferring m: l ranks some student gained in other above s, ranks some
// student lost from m below s, and l's sets differ.
PropertyReport check_lemma_same_lecturer(const Instance& instance,
                                         const Matching& m,
                                         const Matching& other);

// If l's sets differ and some student l has only in m prefers m, then l
// prefers other to m.
PropertyReport check_lemma_pref_reversal(const Instance& instance,
                                         const Matching& m,
                                         const Matching& other);

// For s moving between projects and preferring m, with p = other(s) offered
// by l: l ranks s above everyone p has only in m, and, when p is
// undersubscribed in m, above everyone l has only in m.
PropertyReport check_lemma_rank_boundaries(const Instance& instance,
                                           const Matching& m,
                                           const Matching& other);

// The four pairwise checks over all ordered pairs of distinct members.
PropertyReport check_pairwise_lemmas(const Instance& instance,
                                     const StableSet& set);

// Partial-order axioms, meet/join closure, greatest-lower-bound and
// least-upper-bound characterisations over all pairs, both distributive
// identities over all triples, and dominance reversal over all ordered pairs.
PropertyReport check_lattice_axioms(const Instance& instance,
                                    const StableSet& set);

// Everything above.
PropertyReport verify_all(const Instance& instance, const StableSet& set);

// Greedy deterministic shrinking: repeatedly drops a student or a project
// while the result stays a valid instance on which `still_fails` holds.
Instance shrink_counterexample(
    const Instance& instance,
    const std::function<bool(const Instance&)>& still_fails);

}  // namespace spas

#endif  // SPAS_VERIFICATION_H_
