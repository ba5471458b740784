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

#ifndef SPAS_IDS_H_
#define SPAS_IDS_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace spas {

// Strongly typed dense index for one agent role. Internally 0-based; the
// textual form is 1-based with a role prefix ("s1", "p3", "l2").
template <typename Tag>
class Id {
 public:
  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t index) : index_(index) {}

  // Builds an id from its 1-based textual number.
  static constexpr Id FromNumber(std::uint32_t number) {
    return Id(number - 1);
  }

  constexpr std::uint32_t index() const { return index_; }
  constexpr std::uint32_t number() const { return index_ + 1; }

  friend constexpr auto operator<=>(Id, Id) = default;

 private:
  std::uint32_t index_ = 0;
};

struct StudentTag {
  static constexpr char kPrefix = 's';
};
struct ProjectTag {
  static constexpr char kPrefix = 'p';
};
struct LecturerTag {
  static constexpr char kPrefix = 'l';
};

using StudentId = Id<StudentTag>;
using ProjectId = Id<ProjectTag>;
using LecturerId = Id<LecturerTag>;

template <typename Tag>
std::string to_string(Id<Tag> id) {
  return Tag::kPrefix + std::to_string(id.number());
}

template <typename Tag>
std::ostream& operator<<(std::ostream& os, Id<Tag> id) {
  return os << to_string(id);
}

}  // namespace spas

template <typename Tag>
struct std::hash<spas::Id<Tag>> {
  std::size_t operator()(spas::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.index());
  }
};

#endif  // SPAS_IDS_H_
