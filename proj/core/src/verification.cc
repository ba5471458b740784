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

#include "spas/verification.h"

#include <algorithm>
#include <map>
#include <utility>

namespace spas {

PropertyOutcome& PropertyReport::add(std::string property) {
  outcomes_.push_back({std::move(property), true, 0, std::nullopt});
  return outcomes_.back();
}

void PropertyReport::merge(const PropertyReport& other) {
  for (const PropertyOutcome& o : other.outcomes_) {
    PropertyOutcome* mine = nullptr;
    for (auto& existing : outcomes_) {
      if (existing.property == o.property) mine = &existing;
    }
    if (mine == nullptr) {
      outcomes_.push_back(o);
      continue;
    }
    mine->cases += o.cases;
    if (!o.passed && mine->passed) {
      mine->passed = false;
      mine->counterexample = o.counterexample;
    }
  }
}

const PropertyOutcome* PropertyReport::find(const std::string& property) const {
  for (const auto& o : outcomes_) {
    if (o.property == property) return &o;
  }
  return nullptr;
}

bool PropertyReport::passed() const {
  return std::all_of(outcomes_.begin(), outcomes_.end(),
                     [](const PropertyOutcome& o) { return o.passed; });
}

namespace {

using StudentSet = std::vector<StudentId>;  // sorted
using Assignment = std::vector<std::optional<ProjectId>>;

// Plain per-agent projection of a matching.
struct Snapshot {
  Matching matching;
  Assignment project;
  std::vector<StudentSet> by_project;
  std::vector<StudentSet> by_lecturer;
};

Snapshot Take(const Instance& inst, const Matching& m) {
  Snapshot snap{m, m.assignment(inst.num_students()),
                std::vector<StudentSet>(inst.num_projects()),
                std::vector<StudentSet>(inst.num_lecturers())};
  for (const auto& [s, p] : m.pairs()) {
    snap.by_project[p.index()].push_back(s);
    snap.by_lecturer[inst.lecturer_of(p).index()].push_back(s);
  }
  return snap;
}

StudentSet Minus(const StudentSet& a, const StudentSet& b) {
  StudentSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool Contains(const StudentSet& set, StudentId s) {
  return std::binary_search(set.begin(), set.end(), s);
}

// s is assigned in both and strictly prefers their project in a.
bool StudentPrefers(const Instance& inst, const Assignment& a,
                    const Assignment& b, StudentId s) {
  const auto& pa = a[s.index()];
  const auto& pb = b[s.index()];
  return pa && pb && inst.rank(s, *pa) < inst.rank(s, *pb);
}

bool StudentDominates(const Instance& inst, const Assignment& a,
                      const Assignment& b) {
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i] && !StudentPrefers(inst, a, b, StudentId(i))) {
      return false;
    }
  }
  return true;
}

// l prefers set `a` to set `b`: the sets differ, and position by position in
// l's order every student only in a beats the student only in b.
bool LecturerPrefers(const Instance& inst, LecturerId l, const StudentSet& a,
                     const StudentSet& b) {
  StudentSet only_a = Minus(a, b);
  StudentSet only_b = Minus(b, a);
  if (only_a.empty() || only_a.size() != only_b.size()) return false;
  auto by_rank = [&](StudentId x, StudentId y) {
    return inst.rank(l, x) < inst.rank(l, y);
  };
  std::sort(only_a.begin(), only_a.end(), by_rank);
  std::sort(only_b.begin(), only_b.end(), by_rank);
  for (std::size_t i = 0; i < only_a.size(); ++i) {
    if (inst.rank(l, only_a[i]) >= inst.rank(l, only_b[i])) return false;
  }
  return true;
}

bool LecturerDominates(const Instance& inst, const Snapshot& a,
                       const Snapshot& b) {
  for (std::uint32_t k = 0; k < inst.num_lecturers(); ++k) {
    const auto& sa = a.by_lecturer[k];
    const auto& sb = b.by_lecturer[k];
    if (sa != sb && !LecturerPrefers(inst, LecturerId(k), sa, sb)) {
      return false;
    }
  }
  return true;
}

// Per-student better (meet) or worse (join) project.
Assignment Combine(const Instance& inst, const Assignment& a,
                   const Assignment& b, bool better) {
  Assignment out(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (!a[i] || !b[i]) {
      out[i] = a[i] ? a[i] : b[i];
      continue;
    }
    const bool a_first =
        inst.rank(StudentId(i), *a[i]) <= inst.rank(StudentId(i), *b[i]);
    out[i] = (a_first == better) ? a[i] : b[i];
  }
  return out;
}

void Fail(PropertyOutcome& outcome, std::string detail,
          std::vector<Matching> matchings, std::vector<std::string> agents) {
  if (!outcome.passed) return;
  outcome.passed = false;
  outcome.counterexample =
      Counterexample{std::move(detail), std::move(matchings), std::move(agents)};
}

std::string Names(const StudentSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(set[i]);
  }
  return out + "}";
}

}  // namespace

PropertyReport check_unpopular_projects(const Instance& inst,
                                        const StableSet& set) {
  PropertyReport report;
  auto& lect_counts = report.add("unpopular-projects/lecturer-counts");
  auto& unassigned = report.add("unpopular-projects/same-unassigned");
  auto& proj_counts = report.add("unpopular-projects/project-counts");
  if (set.empty()) return report;

  std::vector<Snapshot> snaps;
  for (const Matching& m : set) snaps.push_back(Take(inst, m));
  const Snapshot& base = snaps.front();

  std::vector<bool> undersubscribed(inst.num_lecturers(), false);
  for (const Snapshot& snap : snaps) {
    for (std::uint32_t k = 0; k < inst.num_lecturers(); ++k) {
      if (snap.by_lecturer[k].size() < inst.capacity(LecturerId(k))) {
        undersubscribed[k] = true;
      }
    }
  }

  for (std::size_t n = 1; n < snaps.size(); ++n) {
    const Snapshot& other = snaps[n];
    for (std::uint32_t k = 0; k < inst.num_lecturers(); ++k) {
      ++lect_counts.cases;
      if (base.by_lecturer[k].size() != other.by_lecturer[k].size()) {
        Fail(lect_counts,
             "lecturer is assigned " +
                 std::to_string(base.by_lecturer[k].size()) + " and " +
                 std::to_string(other.by_lecturer[k].size()) + " students",
             {base.matching, other.matching}, {to_string(LecturerId(k))});
      }
    }
    for (std::uint32_t i = 0; i < inst.num_students(); ++i) {
      ++unassigned.cases;
      if (base.project[i].has_value() != other.project[i].has_value()) {
        Fail(unassigned, "student is unassigned in only one matching",
             {base.matching, other.matching}, {to_string(StudentId(i))});
      }
    }
    for (std::uint32_t j = 0; j < inst.num_projects(); ++j) {
      const ProjectId p(j);
      if (!undersubscribed[inst.lecturer_of(p).index()]) continue;
      ++proj_counts.cases;
      if (base.by_project[j].size() != other.by_project[j].size()) {
        Fail(proj_counts,
             "project of an undersubscribed lecturer is assigned " +
                 std::to_string(base.by_project[j].size()) + " and " +
                 std::to_string(other.by_project[j].size()) + " students",
             {base.matching, other.matching}, {to_string(p)});
      }
    }
  }
  return report;
}

PropertyReport check_prop_full_project(const Instance& inst, const Matching& m,
                                       const Matching& other) {
  PropertyReport report;
  auto& outcome = report.add("proposition-full-project");
  const Snapshot a = Take(inst, m);
  const Snapshot b = Take(inst, other);
  for (const auto& [s, p] : m.pairs()) {
    if (!StudentPrefers(inst, a.project, b.project, s)) continue;
    const LecturerId l = inst.lecturer_of(p);
    const StudentSet& theirs = b.by_lecturer[l.index()];
    const bool connected =
        Contains(theirs, s) ||
        std::any_of(theirs.begin(), theirs.end(), [&](StudentId t) {
          return inst.rank(l, s) < inst.rank(l, t);
        });
    if (!connected) continue;
    ++outcome.cases;
    if (b.by_project[p.index()].size() != inst.capacity(p)) {
      Fail(outcome, "project is undersubscribed in the second matching",
           {m, other}, {to_string(s), to_string(p), to_string(l)});
    }
  }
  return report;
}

PropertyReport check_lemma_same_lecturer(const Instance& inst,
                                         const Matching& m,
                                         const Matching& other) {
  PropertyReport report;
  auto& outcome = report.add("lemma-same-lecturer");
  const Snapshot a = Take(inst, m);
  const Snapshot b = Take(inst, other);
  for (std::uint32_t i = 0; i < inst.num_students(); ++i) {
    const StudentId s(i);
    const auto& pa = a.project[i];
    const auto& pb = b.project[i];
    if (!pa || !pb || *pa == *pb) continue;
    const LecturerId l = inst.lecturer_of(*pa);
    if (inst.lecturer_of(*pb) != l) continue;
    if (!StudentPrefers(inst, a.project, b.project, s)) continue;
    ++outcome.cases;
    const StudentSet& in_a = a.by_lecturer[l.index()];
    const StudentSet& in_b = b.by_lecturer[l.index()];
    const StudentSet gained = Minus(in_b, in_a);
    const StudentSet lost = Minus(in_a, in_b);
    const auto rank = inst.rank(l, s);
    const bool better_gained =
        std::any_of(gained.begin(), gained.end(),
                    [&](StudentId t) { return inst.rank(l, t) < rank; });
    const bool worse_lost =
        std::any_of(lost.begin(), lost.end(),
                    [&](StudentId t) { return rank < inst.rank(l, t); });
    if (!better_gained || !worse_lost || in_a == in_b) {
      Fail(outcome,
           std::string(!better_gained ? "no gained student ranked above"
                                      : "no lost student ranked below") +
               " the student; gained " + Names(gained) + ", lost " +
               Names(lost),
           {m, other}, {to_string(s), to_string(l)});
    }
  }
  return report;
}

PropertyReport check_lemma_pref_reversal(const Instance& inst,
                                         const Matching& m,
                                         const Matching& other) {
  PropertyReport report;
  auto& outcome = report.add("lemma-preference-reversal");
  const Snapshot a = Take(inst, m);
  const Snapshot b = Take(inst, other);
  for (std::uint32_t k = 0; k < inst.num_lecturers(); ++k) {
    const LecturerId l(k);
    const StudentSet& in_a = a.by_lecturer[k];
    const StudentSet& in_b = b.by_lecturer[k];
    if (in_a == in_b) continue;
    const StudentSet lost = Minus(in_a, in_b);
    const bool trigger =
        std::any_of(lost.begin(), lost.end(), [&](StudentId s) {
          return StudentPrefers(inst, a.project, b.project, s);
        });
    if (!trigger) continue;
    ++outcome.cases;
    if (!LecturerPrefers(inst, l, in_b, in_a)) {
      Fail(outcome,
           "lecturer does not prefer the second matching; first " +
               Names(in_a) + ", second " + Names(in_b),
           {m, other}, {to_string(l)});
    }
  }
  return report;
}

PropertyReport check_lemma_rank_boundaries(const Instance& inst,
                                           const Matching& m,
                                           const Matching& other) {
  PropertyReport report;
  auto& part_a = report.add("lemma-rank-boundaries/project");
  auto& part_b = report.add("lemma-rank-boundaries/lecturer");
  const Snapshot a = Take(inst, m);
  const Snapshot b = Take(inst, other);
  for (std::uint32_t i = 0; i < inst.num_students(); ++i) {
    const StudentId s(i);
    const auto& pa = a.project[i];
    const auto& pb = b.project[i];
    if (!pa || !pb || *pa == *pb) continue;
    if (!StudentPrefers(inst, a.project, b.project, s)) continue;
    const ProjectId p = *pb;
    const LecturerId l = inst.lecturer_of(p);
    const auto rank = inst.rank(l, s);
    const StudentSet left_p =
        Minus(a.by_project[p.index()], b.by_project[p.index()]);
    if (!left_p.empty()) {
      ++part_a.cases;
      for (StudentId t : left_p) {
        if (inst.rank(l, t) <= rank) {
          Fail(part_a,
               "lecturer does not rank the student above " + to_string(t),
               {m, other}, {to_string(s), to_string(p), to_string(l)});
        }
      }
    }
    if (a.by_project[p.index()].size() < inst.capacity(p)) {
      ++part_b.cases;
      const StudentSet left_l =
          Minus(a.by_lecturer[l.index()], b.by_lecturer[l.index()]);
      for (StudentId t : left_l) {
        if (inst.rank(l, t) <= rank) {
          Fail(part_b,
               "lecturer does not rank the student above " + to_string(t),
               {m, other}, {to_string(s), to_string(p), to_string(l)});
        }
      }
    }
  }
  return report;
}

PropertyReport check_pairwise_lemmas(const Instance& inst,
                                     const StableSet& set) {
  PropertyReport report;
  report.add("proposition-full-project");
  report.add("lemma-same-lecturer");
  report.add("lemma-preference-reversal");
  report.add("lemma-rank-boundaries/project");
  report.add("lemma-rank-boundaries/lecturer");
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      report.merge(check_prop_full_project(inst, set[i], set[j]));
      report.merge(check_lemma_same_lecturer(inst, set[i], set[j]));
      report.merge(check_lemma_pref_reversal(inst, set[i], set[j]));
      report.merge(check_lemma_rank_boundaries(inst, set[i], set[j]));
    }
  }
  return report;
}

PropertyReport check_lattice_axioms(const Instance& inst,
                                    const StableSet& set) {
  PropertyReport report;
  auto& reflexive = report.add("partial-order/reflexive");
  auto& antisymmetric = report.add("partial-order/antisymmetric");
  auto& transitive = report.add("partial-order/transitive");
  auto& meet_closed = report.add("lattice/meet-closure");
  auto& join_closed = report.add("lattice/join-closure");
  auto& glb = report.add("lattice/greatest-lower-bound");
  auto& lub = report.add("lattice/least-upper-bound");
  auto& dist_join = report.add("distributive/join-over-meet");
  auto& dist_meet = report.add("distributive/meet-over-join");
  auto& reversal = report.add("dominance-reversal");

  const std::size_t n = set.size();
  std::vector<Snapshot> snaps;
  for (const Matching& m : set) snaps.push_back(Take(inst, m));
  std::map<Assignment, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(snaps[i].project, i);

  std::vector<std::vector<bool>> dom(n, std::vector<bool>(n));
  std::vector<std::vector<bool>> ldom(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dom[i][j] = StudentDominates(inst, snaps[i].project, snaps[j].project);
      ldom[i][j] = LecturerDominates(inst, snaps[i], snaps[j]);
    }
  }
  const auto& ms = set.members();

  for (std::size_t i = 0; i < n; ++i) {
    ++reflexive.cases;
    if (!dom[i][i]) Fail(reflexive, "matching does not dominate itself",
                         {ms[i]}, {});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++antisymmetric.cases;
      if (i != j && dom[i][j] && dom[j][i]) {
        Fail(antisymmetric, "distinct matchings dominate each other",
             {ms[i], ms[j]}, {});
      }
      ++reversal.cases;
      if (dom[i][j] != ldom[j][i]) {
        Fail(reversal,
             dom[i][j] ? "student dominance without lecturer dominance"
                       : "lecturer dominance without student dominance",
             {ms[i], ms[j]}, {});
      }
      for (std::size_t k = 0; k < n; ++k) {
        ++transitive.cases;
        if (dom[i][j] && dom[j][k] && !dom[i][k]) {
          Fail(transitive, "dominance is not transitive",
               {ms[i], ms[j], ms[k]}, {});
        }
      }
    }
  }

  // Meets and joins of all pairs, as indices into the set when closed.
  std::vector<std::vector<Assignment>> meets(n, std::vector<Assignment>(n));
  std::vector<std::vector<Assignment>> joins(n, std::vector<Assignment>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      meets[i][j] = Combine(inst, snaps[i].project, snaps[j].project, true);
      joins[i][j] = Combine(inst, snaps[i].project, snaps[j].project, false);
      ++meet_closed.cases;
      ++join_closed.cases;
      const auto mi = index.find(meets[i][j]);
      const auto ji = index.find(joins[i][j]);
      if (mi == index.end()) {
        Fail(meet_closed, "meet is not a member of the set", {ms[i], ms[j]},
             {});
      } else {
        ++glb.cases;
        const std::size_t w = mi->second;
        if (!dom[w][i] || !dom[w][j]) {
          Fail(glb, "meet is not a lower bound", {ms[i], ms[j]}, {});
        }
        for (std::size_t z = 0; z < n; ++z) {
          if (dom[z][i] && dom[z][j] && !dom[z][w]) {
            Fail(glb, "a common lower bound is not below the meet",
                 {ms[i], ms[j], ms[z]}, {});
          }
        }
      }
      if (ji == index.end()) {
        Fail(join_closed, "join is not a member of the set", {ms[i], ms[j]},
             {});
      } else {
        ++lub.cases;
        const std::size_t w = ji->second;
        if (!dom[i][w] || !dom[j][w]) {
          Fail(lub, "join is not an upper bound", {ms[i], ms[j]}, {});
        }
        for (std::size_t z = 0; z < n; ++z) {
          if (dom[i][z] && dom[j][z] && !dom[w][z]) {
            Fail(lub, "a common upper bound is not above the join",
                 {ms[i], ms[j], ms[z]}, {});
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Assignment& x = snaps[i].project;
        ++dist_join.cases;
        const Assignment lhs = Combine(inst, x, meets[j][k], false);
        const Assignment rhs =
            Combine(inst, joins[i][j], joins[i][k], true);
        if (lhs != rhs) {
          Fail(dist_join, "join over meet differs", {ms[i], ms[j], ms[k]},
               {});
        }
        ++dist_meet.cases;
        const Assignment lhs2 = Combine(inst, x, joins[j][k], true);
        const Assignment rhs2 =
            Combine(inst, meets[i][j], meets[i][k], false);
        if (lhs2 != rhs2) {
          Fail(dist_meet, "meet over join differs", {ms[i], ms[j], ms[k]},
               {});
        }
      }
    }
  }
  return report;
}

PropertyReport verify_all(const Instance& inst, const StableSet& set) {
  PropertyReport report = check_unpopular_projects(inst, set);
  report.merge(check_lattice_axioms(inst, set));
  report.merge(check_pairwise_lemmas(inst, set));
  return report;
}

namespace {

std::optional<Instance> WithoutStudent(const InstanceDescription& d,
                                       std::uint32_t gone) {
  InstanceDescription out = d;
  out.num_students -= 1;
  out.student_preferences.erase(out.student_preferences.begin() + gone);
  for (auto& lecturer : out.lecturers) {
    std::vector<StudentId> kept;
    for (StudentId s : lecturer.preferences) {
      if (s.index() == gone) continue;
      kept.push_back(s.index() > gone ? StudentId(s.index() - 1) : s);
    }
    lecturer.preferences = std::move(kept);
  }
  BuildResult built = build_instance(std::move(out));
  return std::move(built.instance);
}

std::optional<Instance> WithoutProject(const InstanceDescription& d,
                                       std::uint32_t gone) {
  InstanceDescription out = d;
  out.num_projects -= 1;
  out.projects.erase(out.projects.begin() + gone);
  for (auto& prefs : out.student_preferences) {
    std::vector<ProjectId> kept;
    for (ProjectId p : prefs) {
      if (p.index() == gone) continue;
      kept.push_back(p.index() > gone ? ProjectId(p.index() - 1) : p);
    }
    prefs = std::move(kept);
  }
  // Keep lecturer lists consistent with the shrunken student lists.
  for (std::uint32_t k = 0; k < out.num_lecturers; ++k) {
    auto& list = out.lecturers[k].preferences;
    std::erase_if(list, [&](StudentId s) {
      const auto& prefs = out.student_preferences[s.index()];
      return std::none_of(prefs.begin(), prefs.end(), [&](ProjectId p) {
        return out.projects[p.index()].lecturer == LecturerId(k);
      });
    });
  }
  BuildResult built = build_instance(std::move(out));
  return std::move(built.instance);
}

}  // namespace

Instance shrink_counterexample(
    const Instance& instance,
    const std::function<bool(const Instance&)>& still_fails) {
  Instance current = instance;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t i = 0; i < current.num_students() && !changed; ++i) {
      auto smaller = WithoutStudent(current.description(), i);
      if (smaller && still_fails(*smaller)) {
        current = std::move(*smaller);
        changed = true;
      }
    }
    for (std::uint32_t j = 0; j < current.num_projects() && !changed; ++j) {
      auto smaller = WithoutProject(current.description(), j);
      if (smaller && still_fails(*smaller)) {
        current = std::move(*smaller);
        changed = true;
      }
    }
  }
  return current;
}

}  // namespace spas
