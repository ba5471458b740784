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

#include <gtest/gtest.h>

#include "spas/errors.h"
#include "support/reference.h"

namespace spas {
namespace {

ProjectId P(std::uint32_t n) { return ProjectId::FromNumber(n); }
StudentId S(std::uint32_t n) { return StudentId::FromNumber(n); }
LecturerId L(std::uint32_t n) { return LecturerId::FromNumber(n); }

// One student, one project, one lecturer, everything consistent.
InstanceDescription Tiny() {
  InstanceDescription d;
  d.num_students = 1;
  d.num_projects = 1;
  d.num_lecturers = 1;
  d.resize();
  d.student_preferences[0] = {P(1)};
  d.projects[0] = {1, L(1)};
  d.lecturers[0] = {1, {S(1)}};
  return d;
}

TEST(InstanceTest, BuildsI1) {
  const BuildResult r = build_instance(testing::i1_description());
  ASSERT_TRUE(r) << describe(r.report);
  EXPECT_TRUE(r.report.warnings.empty());
  const Instance& i = *r.instance;
  EXPECT_EQ(i.num_students(), 5u);
  EXPECT_EQ(i.num_projects(), 5u);
  EXPECT_EQ(i.num_lecturers(), 2u);
  EXPECT_EQ(i.lecturer_of(P(5)), L(1));
  EXPECT_EQ(i.capacity(L(1)), 3u);
  EXPECT_EQ(i.rank(S(3), P(1)), 1u);
  EXPECT_EQ(i.rank(S(3), P(2)), Instance::kUnranked);
  EXPECT_EQ(i.rank(L(2), S(4)), 3u);
  EXPECT_TRUE(i.prefers(L(1), S(4), S(1)));
  const std::vector<ProjectId> offered(i.projects_of(L(1)).begin(),
                                       i.projects_of(L(1)).end());
  EXPECT_EQ(offered, (std::vector<ProjectId>{P(1), P(2), P(5)}));
}

TEST(InstanceTest, ProjectedList) {
  const Instance i = testing::i1();
  EXPECT_EQ(projected_list(i, L(2), P(4)), (std::vector<StudentId>{S(5), S(4)}));
  EXPECT_EQ(projected_list(i, L(1), P(1)), (std::vector<StudentId>{S(3), S(1)}));
  EXPECT_THROW(projected_list(i, L(2), P(1)), Error);
  EXPECT_THROW(projected_list(i, L(3), P(1)), UnknownIdentifierError);
}

TEST(InstanceTest, AcceptablePair) {
  const Instance i = testing::i1();
  EXPECT_TRUE(acceptable_pair(i, S(1), P(2)));
  EXPECT_FALSE(acceptable_pair(i, S(1), P(3)));
  EXPECT_THROW(acceptable_pair(i, S(6), P(1)), UnknownIdentifierError);
  EXPECT_THROW(acceptable_pair(i, S(1), P(6)), UnknownIdentifierError);
}

TEST(InstanceTest, EmptyInstanceIsValid) {
  const BuildResult r = build_instance(InstanceDescription{});
  ASSERT_TRUE(r);
  EXPECT_EQ(r.instance->num_students(), 0u);
}

TEST(InstanceTest, ZeroProjectCapacity) {
  auto d = Tiny();
  d.projects[0].capacity = 0;
  const BuildResult r = build_instance(d);
  EXPECT_FALSE(r);
  EXPECT_TRUE(r.report.has_error(Rule::kNonPositiveCapacity));
}

TEST(InstanceTest, LecturerCapacityBelowLargestProject) {
  auto d = testing::i3_description();
  d.lecturers[0].capacity = 1;  // p1 has capacity 2
  const BuildResult r = build_instance(d);
  EXPECT_FALSE(r);
  EXPECT_TRUE(r.report.has_error(Rule::kCapacityBound));
}

TEST(InstanceTest, LecturerCapacityAboveTotal) {
  auto d = testing::i1_description();
  d.lecturers[1].capacity = 3;  // p3 + p4 = 2
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kCapacityBound));
}

TEST(InstanceTest, ProjectWithoutLecturer) {
  auto d = Tiny();
  d.projects[0].lecturer.reset();
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kPartition));
}

TEST(InstanceTest, LecturerWithoutProjects) {
  auto d = Tiny();
  d.num_lecturers = 2;
  d.lecturers.push_back({1, {}});
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kPartition));
}

TEST(InstanceTest, DanglingIdentifiers) {
  auto d = Tiny();
  d.student_preferences[0].push_back(P(7));
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kDanglingIdentifier));

  d = Tiny();
  d.projects[0].lecturer = L(4);
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kDanglingIdentifier));

  d = Tiny();
  d.lecturers[0].preferences.push_back(S(9));
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kDanglingIdentifier));
}

TEST(InstanceTest, DuplicateEntries) {
  auto d = Tiny();
  d.student_preferences[0].push_back(P(1));
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kDuplicateEntry));

  d = Tiny();
  d.lecturers[0].preferences.push_back(S(1));
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kDuplicateEntry));
}

TEST(InstanceTest, LecturerListMustEqualInterestedStudents) {
  auto d = testing::i1_description();
  d.lecturers[1].preferences.pop_back();  // drops s4, who ranks p4
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kLecturerListMismatch));

  d = testing::i1_description();
  d.lecturers[1].preferences.push_back(S(1));  // s1 ranks no project of l2
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kLecturerListMismatch));
}

TEST(InstanceTest, ShapeMismatch) {
  auto d = Tiny();
  d.num_students = 2;
  EXPECT_TRUE(build_instance(d).report.has_error(Rule::kShape));
}

TEST(InstanceTest, EmptyStudentListIsOnlyAWarning) {
  auto d = Tiny();
  d.num_students = 2;
  d.student_preferences.emplace_back();
  const BuildResult r = build_instance(d);
  ASSERT_TRUE(r) << describe(r.report);
  ASSERT_EQ(r.report.warnings.size(), 1u);
  EXPECT_EQ(r.report.warnings[0].rule, Rule::kEmptyPreferenceList);
}

TEST(InstanceTest, ReportsEveryViolation) {
  auto d = Tiny();
  d.projects[0].capacity = 0;
  d.student_preferences[0].push_back(P(3));
  const BuildResult r = build_instance(d);
  EXPECT_TRUE(r.report.has_error(Rule::kNonPositiveCapacity));
  EXPECT_TRUE(r.report.has_error(Rule::kDanglingIdentifier));
  EXPECT_NE(describe(r.report).find("dangling-identifier"), std::string::npos);
}

TEST(InstanceTest, OrThrowCarriesTheReport) {
  auto d = Tiny();
  d.projects[0].capacity = 0;
  try {
    build_instance_or_throw(d);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("non-positive-capacity"),
              std::string::npos);
  }
}

TEST(InstanceTest, EqualityFollowsDescription) {
  EXPECT_EQ(testing::i1(), testing::i1());
  EXPECT_FALSE(testing::i1() == testing::i3());
}

}  // namespace
}  // namespace spas
