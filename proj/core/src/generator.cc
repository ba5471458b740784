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
#include <limits>

#include "spas/errors.h"

namespace spas {

std::uint64_t PortableRng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t draw = next();
  while (draw > limit) draw = next();
  return draw % bound;
}

double PortableRng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

void check_params(const GenParams& p) {
  if (p.lecturers > p.projects) {
    throw InfeasibleParamsError(
        "every lecturer needs a project: " + std::to_string(p.lecturers) +
        " lecturers but only " + std::to_string(p.projects) + " projects");
  }
  if (p.projects > 0 && p.lecturers == 0) {
    throw InfeasibleParamsError("projects need at least one lecturer");
  }
  if (p.min_list_length > p.max_list_length) {
    throw InfeasibleParamsError("empty preference-list length range");
  }
  if (p.min_project_capacity == 0 ||
      p.min_project_capacity > p.max_project_capacity) {
    throw InfeasibleParamsError("project capacity range must be non-empty and positive");
  }
  if (!(p.density >= 0.0 && p.density <= 1.0)) {
    throw InfeasibleParamsError("density must lie in [0, 1]");
  }
}

InstanceDescription generate_description(const GenParams& params) {
  check_params(params);
  PortableRng rng(params.seed);
  InstanceDescription d;
  d.num_students = params.students;
  d.num_projects = params.projects;
  d.num_lecturers = params.lecturers;
  d.resize();

  // Projects: shuffle, deal one to each lecturer, the rest uniformly.
  std::vector<std::uint32_t> order(params.projects);
  for (std::uint32_t j = 0; j < order.size(); ++j) order[j] = j;
  rng.shuffle(std::span(order));
  for (std::size_t n = 0; n < order.size(); ++n) {
    const std::uint32_t owner =
        n < params.lecturers ? static_cast<std::uint32_t>(n)
                             : static_cast<std::uint32_t>(
                                   rng.below(params.lecturers));
    auto& spec = d.projects[order[n]];
    spec.lecturer = LecturerId(owner);
    spec.capacity = static_cast<std::uint32_t>(rng.between(
        params.min_project_capacity, params.max_project_capacity));
  }

  const std::size_t max_len = std::min(params.max_list_length, params.projects);
  const std::size_t min_len = std::min(params.min_list_length, max_len);
  for (auto& prefs : d.student_preferences) {
    std::vector<ProjectId> chosen;
    std::vector<ProjectId> rest;
    for (std::uint32_t j = 0; j < params.projects; ++j) {
      (rng.bernoulli(params.density) ? chosen : rest).push_back(ProjectId(j));
    }
    rng.shuffle(std::span(rest));
    while (chosen.size() < min_len) {
      chosen.push_back(rest.back());
      rest.pop_back();
    }
    rng.shuffle(std::span(chosen));
    if (chosen.size() > max_len) chosen.resize(max_len);
    prefs = std::move(chosen);
  }

  for (std::uint32_t k = 0; k < params.lecturers; ++k) {
    auto& lecturer = d.lecturers[k];
    std::uint32_t max_cap = 0;
    std::uint32_t sum_cap = 0;
    for (const auto& spec : d.projects) {
      if (spec.lecturer->index() != k) continue;
      max_cap = std::max(max_cap, spec.capacity);
      sum_cap += spec.capacity;
    }
    lecturer.capacity = static_cast<std::uint32_t>(rng.between(max_cap, sum_cap));
    for (std::uint32_t i = 0; i < params.students; ++i) {
      const auto& prefs = d.student_preferences[i];
      const bool interested =
          std::any_of(prefs.begin(), prefs.end(), [&](ProjectId p) {
            return d.projects[p.index()].lecturer->index() == k;
          });
      if (interested) lecturer.preferences.push_back(StudentId(i));
    }
    rng.shuffle(std::span(lecturer.preferences));
  }
  return d;
}

Instance generate(const GenParams& params) {
  return build_instance_or_throw(generate_description(params));
}

GenParams sample_params(std::uint64_t seed, const GenLimits& limits) {
  // A separate stream so sizes and content do not share draws.
  PortableRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  GenParams p;
  p.seed = seed;
  p.students = rng.between(1, std::max<std::size_t>(limits.max_students, 1));
  p.projects = rng.between(1, std::max<std::size_t>(limits.max_projects, 1));
  p.lecturers = rng.between(
      1, std::max<std::size_t>(std::min(limits.max_lecturers, p.projects), 1));
  // Long lists and small capacities make competing students, and with them
  // more than one stable matching, reasonably common.
  p.max_list_length = rng.between(1, p.projects);
  p.min_list_length = rng.between(1, p.max_list_length);
  p.min_project_capacity = 1;
  p.max_project_capacity = static_cast<std::uint32_t>(rng.between(1, 2));
  p.density = 0.5 + 0.1 * static_cast<double>(rng.below(6));
  return p;
}

}  // namespace spas
