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

#include "spas/enumeration.h"

#include <algorithm>
#include <cstdint>
#include <future>

#include "spas/errors.h"

namespace spas {

StableSet::StableSet(std::vector<Matching> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

std::optional<std::size_t> StableSet::index_of(const Matching& m) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), m);
  if (it == members_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

namespace {

constexpr std::int32_t kNone = -1;

// Incremental search state. Students are placed in index order; project and
// lecturer member lists only grow along a branch and are popped on undo.
class Search {
 public:
  explicit Search(const Instance& instance)
      : inst_(instance),
        assign_(instance.num_students(), kNone),
        project_members_(instance.num_projects()),
        lecturer_members_(instance.num_lecturers()),
        last_interested_(instance.num_lecturers(), kNone) {
    for (std::uint32_t i = 0; i < instance.num_students(); ++i) {
      for (ProjectId p : instance.preferences(StudentId(i))) {
        last_interested_[instance.lecturer_of(p).index()] =
            static_cast<std::int32_t>(i);
      }
    }
  }

  std::vector<Matching> Run() {
    Descend(0);
    return std::move(found_);
  }

  // Tries every choice for student 0 in its own Search, concurrently.
  static std::vector<Matching> RunParallel(const Instance& instance) {
    if (instance.num_students() == 0) return Search(instance).Run();
    const StudentId first(0);
    std::vector<std::int32_t> choices;
    for (ProjectId p : instance.preferences(first)) {
      choices.push_back(static_cast<std::int32_t>(p.index()));
    }
    choices.push_back(kNone);
    std::vector<std::future<std::vector<Matching>>> tasks;
    for (std::int32_t choice : choices) {
      tasks.push_back(std::async(std::launch::async, [&instance, choice] {
        Search search(instance);
        if (search.Place(0, choice)) {
          if (search.Consistent(0)) search.Descend(1);
          search.Unplace(0);
        }
        return std::move(search.found_);
      }));
    }
    std::vector<Matching> all;
    for (auto& task : tasks) {
      auto part = task.get();
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return all;
  }

 private:
  void Descend(std::uint32_t depth) {
    if (depth == inst_.num_students()) {
      Record();
      return;
    }
    const StudentId s(depth);
    for (ProjectId p : inst_.preferences(s)) {
      const auto choice = static_cast<std::int32_t>(p.index());
      if (!Place(depth, choice)) continue;
      if (Consistent(depth)) Descend(depth + 1);
      Unplace(depth);
    }
    Place(depth, kNone);
    if (Consistent(depth)) Descend(depth + 1);
    Unplace(depth);
  }

  // Returns false, leaving the state untouched, if a capacity would be
  // exceeded.
  bool Place(std::uint32_t i, std::int32_t choice) {
    if (choice != kNone) {
      const ProjectId p(static_cast<std::uint32_t>(choice));
      const LecturerId l = inst_.lecturer_of(p);
      if (project_members_[p.index()].size() >= inst_.capacity(p) ||
          lecturer_members_[l.index()].size() >= inst_.capacity(l)) {
        return false;
      }
      project_members_[p.index()].push_back(StudentId(i));
      lecturer_members_[l.index()].push_back(StudentId(i));
    }
    assign_[i] = choice;
    return true;
  }

  void Unplace(std::uint32_t i) {
    const std::int32_t choice = assign_[i];
    if (choice != kNone) {
      const ProjectId p(static_cast<std::uint32_t>(choice));
      project_members_[p.index()].pop_back();
      lecturer_members_[inst_.lecturer_of(p).index()].pop_back();
    }
    assign_[i] = kNone;
  }

  std::uint32_t WorstRank(LecturerId l,
                          const std::vector<StudentId>& members) const {
    std::uint32_t worst = 0;
    for (StudentId s : members) worst = std::max(worst, inst_.rank(l, s));
    return worst;
  }

  // False if some placed student already forms a blocking pair that stays
  // blocking in every completion of the prefix. A pair (t, q), q offered by
  // l, is decided once q is full (its members are final), once l is full
  // (no project of l can gain students), or once no later student finds any
  // project of l acceptable. Only undecided pairs are let through, so the
  // prune never removes a stable completion.
  bool Consistent(std::uint32_t depth) const {
    for (std::uint32_t t = 0; t <= depth; ++t) {
      const StudentId s(t);
      const std::int32_t current = assign_[t];
      for (ProjectId q : inst_.preferences(s)) {
        if (static_cast<std::int32_t>(q.index()) == current) break;
        const LecturerId l = inst_.lecturer_of(q);
        const auto& q_members = project_members_[q.index()];
        const auto& l_members = lecturer_members_[l.index()];
        const bool q_full = q_members.size() == inst_.capacity(q);
        const bool l_full = l_members.size() == inst_.capacity(l);
        const bool frozen =
            last_interested_[l.index()] <= static_cast<std::int32_t>(depth);
        if (!q_full && !l_full && !frozen) continue;
        if (Blocks(s, current, l, q_full, l_full, q_members, l_members)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Blocks(StudentId s, std::int32_t current, LecturerId l, bool q_full,
              bool l_full, const std::vector<StudentId>& q_members,
              const std::vector<StudentId>& l_members) const {
    const std::uint32_t rank = inst_.rank(l, s);
    if (q_full) return rank < WorstRank(l, q_members);
    if (!l_full) return true;
    if (current != kNone &&
        inst_.lecturer_of(ProjectId(static_cast<std::uint32_t>(current))) ==
            l) {
      return true;
    }
    return rank < WorstRank(l, l_members);
  }

  void Record() {
    std::vector<Matching::Pair> pairs;
    for (std::uint32_t i = 0; i < assign_.size(); ++i) {
      if (assign_[i] != kNone) {
        pairs.emplace_back(StudentId(i),
                           ProjectId(static_cast<std::uint32_t>(assign_[i])));
      }
    }
    found_.emplace_back(std::move(pairs));
  }

  const Instance& inst_;
  std::vector<std::int32_t> assign_;
  std::vector<std::vector<StudentId>> project_members_;
  std::vector<std::vector<StudentId>> lecturer_members_;
  std::vector<std::int32_t> last_interested_;
  std::vector<Matching> found_;
};

}  // namespace

StableSet enumerate_all(const Instance& instance,
                        const EnumerateOptions& options) {
  if (!options.force && instance.num_students() > options.max_students) {
    throw SizeGuardError(instance.num_students(), options.max_students);
  }
  if (options.parallel) return StableSet(Search::RunParallel(instance));
  return StableSet(Search(instance).Run());
}

std::set<Matching::Pair> stable_pairs(const StableSet& set) {
  std::set<Matching::Pair> out;
  for (const Matching& m : set) out.insert(m.pairs().begin(), m.pairs().end());
  return out;
}

std::set<Matching::Pair> stable_pairs(const Instance& instance,
                                      const EnumerateOptions& options) {
  return stable_pairs(enumerate_all(instance, options));
}

}  // namespace spas
