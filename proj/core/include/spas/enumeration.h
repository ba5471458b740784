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

#ifndef SPAS_ENUMERATION_H_
#define SPAS_ENUMERATION_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "spas/instance.h"
#include "spas/matching.h"

namespace spas {

// Deduplicated matchings in ascending lexicographic order of their canonical
// pair lists. Produced by enumerate_all(); the constructor only sorts and
// deduplicates, it does not check stability.
class StableSet {
 public:
  StableSet() = default;
  explicit StableSet(std::vector<Matching> members);

  std::span<const Matching> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Matching& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::optional<std::size_t> index_of(const Matching& m) const;
  bool contains(const Matching& m) const { return index_of(m).has_value(); }

  friend bool operator==(const StableSet&, const StableSet&) = default;

 private:
  std::vector<Matching> members_;
};

struct EnumerateOptions {
  static constexpr std::size_t kDefaultMaxStudents = 20;

  std::size_t max_students = kDefaultMaxStudents;
  // Ignore max_students.
  bool force = false;
  // Explore the first student's branches on separate threads. The result is
  // identical to the sequential one.
  bool parallel = false;
};

// Every stable matching of the instance. Depth-first over students in index
// order, pruning prefixes that already contain a blocking pair whose status
// no later assignment can change. Throws SizeGuardError past the guard.
StableSet enumerate_all(const Instance& instance,
                        const EnumerateOptions& options = {});

// Pairs that belong to at least one stable matching, sorted.
std::set<Matching::Pair> stable_pairs(const Instance& instance,
                                      const EnumerateOptions& options = {});
std::set<Matching::Pair> stable_pairs(const StableSet& set);

}  // namespace spas

#endif  // SPAS_ENUMERATION_H_
