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

#include "spas/generator.h"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "spas/errors.h"

namespace spas {
namespace {

TEST(PortableRngTest, KnownEngineOutput) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  PortableRng rng(5489u);
  std::uint64_t v = 0;
  for (int k = 0; k < 10000; ++k) v = rng.next();
  EXPECT_EQ(v, 9981545732273789042ULL);
}

TEST(PortableRngTest, BelowStaysInRangeAndCoversIt) {
  PortableRng rng(7);
  std::set<std::uint64_t> seen;
  for (int k = 0; k < 2000; ++k) {
    const auto v = rng.below(6);
    ASSERT_LT(v, 6u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 6u);
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(PortableRngTest, ShuffleIsAPermutation) {
  PortableRng rng(11);
  std::vector<int> v = {1, 2, 3, 4, 5, 6, 7, 8};
  rng.shuffle(std::span(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(GeneratorTest, SameSeedSameInstance) {
  GenParams p;
  p.students = 8;
  p.projects = 6;
  p.lecturers = 3;
  p.seed = 42;
  EXPECT_EQ(generate_description(p), generate_description(p));
  GenParams q = p;
  q.seed = 43;
  EXPECT_FALSE(generate_description(p) == generate_description(q));
}

TEST(GeneratorTest, OutputIsAlwaysValid) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const GenParams p = sample_params(seed, {10, 8, 4});
    const BuildResult r = build_instance(generate_description(p));
    ASSERT_TRUE(r) << "seed " << seed << "\n" << describe(r.report);
    const Instance& i = *r.instance;
    EXPECT_EQ(i.num_students(), p.students);
    for (std::uint32_t s = 0; s < i.num_students(); ++s) {
      const auto len = i.preferences(StudentId(s)).size();
      EXPECT_GE(len, std::min(p.min_list_length, p.projects));
      EXPECT_LE(len, std::min(p.max_list_length, p.projects));
    }
  }
}

TEST(GeneratorTest, SampledSizesRespectLimits) {
  const GenLimits limits{5, 5, 3};
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const GenParams p = sample_params(seed, limits);
    EXPECT_GE(p.students, 1u);
    EXPECT_LE(p.students, 5u);
    EXPECT_LE(p.projects, 5u);
    EXPECT_GE(p.lecturers, 1u);
    EXPECT_LE(p.lecturers, std::min<std::size_t>(3, p.projects));
  }
}

TEST(GeneratorTest, InfeasibleParams) {
  GenParams p;
  p.students = 3;
  p.projects = 2;
  p.lecturers = 3;
  EXPECT_THROW(generate(p), InfeasibleParamsError);
  p.lecturers = 1;
  p.density = 1.5;
  EXPECT_THROW(generate(p), InfeasibleParamsError);
  p.density = 0.5;
  p.min_project_capacity = 0;
  EXPECT_THROW(generate(p), InfeasibleParamsError);
}

TEST(GeneratorTest, ZeroOfEverything) {
  GenParams p;
  EXPECT_EQ(generate(p).num_students(), 0u);
}

}  // namespace
}  // namespace spas
