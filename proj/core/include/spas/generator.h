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

// Seeded random instances for property tests and benchmarks.
//
// The random source is std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Bounded integers use rejection sampling and probabilities use
// the top 53 bits of a draw, both implemented here rather than through the
// <random> distributions (whose algorithms are implementation-defined), so a
// seed yields the same instance on every platform.

#ifndef SPAS_GENERATOR_H_
#define SPAS_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spas/instance.h"

namespace spas {

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  // Uniform in [0, 1).
  double unit();
  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  std::size_t students = 0;
  std::size_t projects = 0;
  std::size_t lecturers = 0;
  // Student list length bounds; max_list_length is clamped to `projects`.
  std::size_t min_list_length = 1;
  std::size_t max_list_length = 4;
  std::uint32_t min_project_capacity = 1;
  std::uint32_t max_project_capacity = 2;
  // Probability that a project enters a student's list before the length
  // bounds are applied.
  double density = 0.5;
  std::uint64_t seed = 0;
};

// Throws InfeasibleParamsError (e.g. more lecturers than projects, empty
// ranges, density outside [0, 1]).
void check_params(const GenParams& params);

// Projects are split among lecturers with every lecturer getting at least
// one; each student's list is sampled by density, padded or truncated to the
// length bounds and shuffled; lecturer lists hold exactly the interested
// students in random order; lecturer capacity is uniform between the
// largest and the total capacity of their projects.
InstanceDescription generate_description(const GenParams& params);
Instance generate(const GenParams& params);

// Size limits for corpus sweeps.
struct GenLimits {
  std::size_t max_students = 5;
  std::size_t max_projects = 5;
  std::size_t max_lecturers = 3;
};

// Draws sizes (students and projects in [1, max], lecturers in
// [1, min(max, projects)]) and list/capacity shapes from `seed`. Project
// capacities are 1 or 2.
GenParams sample_params(std::uint64_t seed, const GenLimits& limits);

}  // namespace spas

#endif  // SPAS_GENERATOR_H_
