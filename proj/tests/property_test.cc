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


// Randomised cross-checks over many generated instances.

#include <algorithm>
#include <span>
#include <unordered_set>

#include <gtest/gtest.h>

#include "spas/enumeration.h"
#include "spas/generator.h"
#include "spas/lattice.h"
#include "spas/matching.h"
#include "spas/stability.h"
#include "support/oracle.h"

namespace spas {
namespace {

// A random capacity-respecting matching: students in random order take a
// random listed project with room, or stay unassigned a quarter of the time.
Matching RandomMatching(const Instance& instance, PortableRng& rng) {
  std::vector<std::optional<ProjectId>> a(instance.num_students());
  std::vector<std::uint32_t> per_project(instance.num_projects(), 0);
  std::vector<std::uint32_t> per_lecturer(instance.num_lecturers(), 0);
  std::vector<std::uint32_t> order(instance.num_students());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(std::span<std::uint32_t>(order));
  for (const std::uint32_t i : order) {
    const auto list = instance.preferences(StudentId(i));
    if (list.empty() || rng.below(4) == 0) continue;
    const ProjectId p = list[rng.below(list.size())];
    const LecturerId l = instance.lecturer_of(p);
    if (per_project[p.index()] == instance.capacity(p) ||
        per_lecturer[l.index()] == instance.capacity(l)) {
      continue;
    }
    ++per_project[p.index()];
    ++per_lecturer[l.index()];
    a[i] = p;
  }
  return Matching::FromAssignment(a);
}

TEST(PropertyTest, BlockingPairsAgreeWithOracleOnRandomMatchings) {
  PortableRng rng(2026);
  std::size_t stable = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Instance i = generate(sample_params(seed, {8, 6, 3}));
    const StableSet set = enumerate_all(i);
    for (int k = 0; k < 10; ++k) {
      const Matching m = RandomMatching(i, rng);
      ASSERT_TRUE(validate_matching(i, m).ok());
      const auto pairs = find_blocking_pairs(i, m);
      ASSERT_EQ(pairs, testing::naive_blocking_pairs(
                           i, m.assignment(i.num_students())))
          << "seed " << seed;
      // A matching is stable exactly when enumeration lists it.
      ASSERT_EQ(pairs.empty(), set.contains(m)) << "seed " << seed;
      stable += pairs.empty();
    }
  }
  EXPECT_GT(stable, 0u);
}

TEST(PropertyTest, ViewCountsAreConsistent) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance i = generate(sample_params(seed, {8, 6, 3}));
    for (const Matching& m : enumerate_all(i)) {
      const MatchingView view(i, m);
      std::vector<std::size_t> by_lecturer(i.num_lecturers(), 0);
      for (std::uint32_t j = 0; j < i.num_projects(); ++j) {
        const ProjectId p(j);
        EXPECT_LE(view.count(p), i.capacity(p));
        by_lecturer[i.lecturer_of(p).index()] += view.count(p);
      }
      for (std::uint32_t k = 0; k < i.num_lecturers(); ++k) {
        EXPECT_EQ(view.count(LecturerId(k)), by_lecturer[k]);
        EXPECT_LE(by_lecturer[k], i.capacity(LecturerId(k)));
      }
    }
  }
}

TEST(PropertyTest, CanonicalFormAndHash) {
  PortableRng rng(7);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance i = generate(sample_params(seed, {8, 6, 3}));
    const Matching m = RandomMatching(i, rng);
    std::vector<Matching::Pair> shuffled(m.pairs().begin(), m.pairs().end());
    rng.shuffle(std::span<Matching::Pair>(shuffled));
    const Matching again(shuffled);
    EXPECT_EQ(again, m);
    EXPECT_EQ(hash_value(again), hash_value(m));
  }
}

TEST(PropertyTest, StableSetMembersAreDistinct) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const StableSet set =
        enumerate_all(generate(sample_params(seed, {8, 6, 3})));
    std::unordered_set<Matching> seen(set.begin(), set.end());
    EXPECT_EQ(seen.size(), set.size());
    EXPECT_TRUE(std::is_sorted(set.begin(), set.end()));
  }
}

TEST(PropertyTest, HasseDiagramIsTransitivelyReduced) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Instance i = generate(sample_params(seed, {8, 6, 3}));
    const StableSet set = enumerate_all(i);
    const HasseDiagram h = build_hasse(i, set);
    EXPECT_EQ(h.sources().size(), 1u);
    EXPECT_EQ(h.sinks().size(), 1u);
    for (const auto& [a, b] : h.edges()) {
      EXPECT_TRUE(student_dominates(i, set[a], set[b]));
      for (std::size_t c = 0; c < set.size(); ++c) {
        if (c == a || c == b) continue;
        EXPECT_FALSE(student_dominates(i, set[a], set[c]) &&
                     student_dominates(i, set[c], set[b]))
            << "seed " << seed;
      }
    }
  }
}

}  // namespace
}  // namespace spas
