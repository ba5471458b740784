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


// Acceptance runner: one PASS or FAIL line per criterion, indented notes
// under failures, nonzero exit if anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "spas/enumeration.h"
#include "spas/generator.h"
#include "spas/io.h"
#include "spas/lattice.h"
#include "spas/solvers.h"
#include "spas/stability.h"
#include "spas/verification.h"
#include "support/golden.h"
#include "support/oracle.h"
#include "support/reference.h"

namespace spas {
namespace {

struct Verdict {
  bool passed = true;
  std::string summary;
  std::vector<std::string> notes;

  void fail(const std::string& note) {
    passed = false;
    notes.push_back(note);
  }
  void expect(bool condition, const std::string& note) {
    if (!condition) fail(note);
  }
};

struct Entry {
  Instance instance;
  StableSet set;
  std::uint64_t seed;
};

// Seeds 1..500 as drawn, then the first 500 seeds above 500 whose instance
// has at least two stable matchings, so pairwise checks have cases.
const std::vector<Entry>& Corpus() {
  static const std::vector<Entry> corpus = [] {
    constexpr GenLimits kLimits{7, 6, 3};
    std::vector<Entry> out;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      Instance i = generate(sample_params(seed, kLimits));
      StableSet set = enumerate_all(i);
      out.push_back({std::move(i), std::move(set), seed});
    }
    std::size_t found = 0;
    for (std::uint64_t seed = 501; found < 500; ++seed) {
      Instance i = generate(sample_params(seed, kLimits));
      StableSet set = enumerate_all(i);
      if (set.size() < 2) continue;
      out.push_back({std::move(i), std::move(set), seed});
      ++found;
    }
    return out;
  }();
  return corpus;
}

std::string Seconds(double s) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f s", s);
  return buffer;
}

std::string Join(const std::vector<Matching>& ms) {
  std::string out;
  for (const auto& m : ms) out += "\n      " + format_inline(m);
  return out;
}

// Tallies failed properties over the corpus and keeps the first
// counterexample of each.
struct FailureTally {
  std::map<std::string, std::size_t> instances;
  std::map<std::string, std::string> first;
  std::size_t cases = 0;

  void add(const PropertyReport& report, std::uint64_t seed) {
    for (const auto& o : report.outcomes()) {
      cases += o.cases;
      if (o.passed) continue;
      if (instances[o.property]++ == 0) {
        first[o.property] = "seed " + std::to_string(seed) + ": " +
                            o.counterexample->detail +
                            Join(o.counterexample->matchings);
      }
    }
  }

  void report(Verdict& v, std::size_t total) const {
    for (const auto& [property, count] : instances) {
      v.fail(property + " fails on " + std::to_string(count) + "/" +
             std::to_string(total) + " instances; first at " +
             first.at(property));
    }
  }
};

Verdict CriterionI1() {
  Verdict v;
  const Instance i = testing::i1();
  const auto paper = testing::i1_matchings();
  const StableSet set = enumerate_all(i);
  if (set != StableSet(paper)) {
    std::string found;
    for (const auto& m : set) found += "\n      " + format_inline(m);
    v.fail("expected exactly the 2 printed matchings, enumeration found " +
           std::to_string(set.size()) + ":" + found);
    // Brute force agrees, so the count is a property of the data.
    v.expect(testing::brute_force_stable(i) == set,
             "brute force disagrees with enumeration");
  }
  for (const SolveMethod method :
       {SolveMethod::kEnumerationExtremum, SolveMethod::kDeferredAcceptance}) {
    v.expect(solve_student_optimal(i, method) == paper[0],
             "student optimum differs from M1 (" + to_string(method) + ")");
    v.expect(solve_lecturer_optimal(i, method) == paper[1],
             "lecturer optimum differs from M2 (" + to_string(method) + ")");
  }
  v.expect(student_dominates(i, paper[0], paper[1]), "M1 does not dominate M2");
  if (v.notes.size() == 1 && set.size() != paper.size()) {
    v.notes.push_back("brute force agrees; optima (enum and da) and "
                      "dominance of M1 over M2 hold");
  }
  v.summary = "I1 stable set and optima";
  return v;
}

Verdict CriterionI3() {
  Verdict v;
  const Instance i = testing::i3();
  const auto table = testing::i3_matchings();
  const StableSet set = enumerate_all(i);
  v.expect(set == StableSet(table),
           "stable set differs from the 7 tabulated matchings");
  v.expect(meet(i, table[2], table[3]) == table[1], "meet(M3, M4) != M2");
  v.expect(join(i, table[2], table[3]) == table[4], "join(M3, M4) != M5");
  const HasseDiagram h = build_hasse(i, set);
  v.expect(h.edges() == testing::i3_edges(), "Hasse edges differ");
  v.expect(h.sources() == std::vector<std::size_t>{0}, "source is not M1");
  v.expect(h.sinks() == std::vector<std::size_t>{6}, "sink is not M7");
  v.summary = "I3 stable set, meet, join and Hasse diagram";
  return v;
}

Verdict CriterionOracle() {
  Verdict v;
  std::size_t matchings = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance i = generate(sample_params(seed, {5, 5, 3}));
    const StableSet fast = enumerate_all(i);
    matchings += fast.size();
    if (fast != testing::brute_force_stable(i)) {
      v.fail("mismatch at seed " + std::to_string(seed));
    }
  }
  v.summary = "enumerator equals brute force on 500 instances (" +
              std::to_string(matchings) + " matchings)";
  return v;
}

Verdict CriterionTheorem() {
  Verdict v;
  FailureTally tally;
  for (const Entry& e : Corpus()) {
    tally.add(check_unpopular_projects(e.instance, e.set), e.seed);
  }
  tally.report(v, Corpus().size());
  v.summary = "unpopular-projects over " + std::to_string(Corpus().size()) +
              " instances (" + std::to_string(tally.cases) + " cases)";
  return v;
}

Verdict CriterionLattice() {
  Verdict v;
  FailureTally tally;
  for (const Entry& e : Corpus()) {
    tally.add(check_lattice_axioms(e.instance, e.set), e.seed);
    // Independent closure check: the columnwise extremes of the whole set
    // are members and are the lattice's bottom and top.
    const Matching best = testing::columnwise_best(e.instance, e.set);
    const Matching worst = testing::columnwise_worst(e.instance, e.set);
    if (meet_all(e.instance, e.set) != best ||
        join_all(e.instance, e.set) != worst || !e.set.contains(best) ||
        !e.set.contains(worst)) {
      v.fail("extremes disagree with the columnwise oracle at seed " +
             std::to_string(e.seed));
    }
  }
  tally.report(v, Corpus().size());
  v.summary = "lattice axioms over " + std::to_string(Corpus().size()) +
              " instances (" + std::to_string(tally.cases) + " cases)";
  return v;
}

Verdict CriterionLemmas() {
  Verdict v;
  FailureTally tally;
  std::size_t unconfirmed = 0;
  for (const Entry& e : Corpus()) {
    const PropertyReport report = check_pairwise_lemmas(e.instance, e.set);
    tally.add(report, e.seed);
    // A counterexample only counts if its matchings really are stable.
    for (const auto& o : report.outcomes()) {
      if (o.passed) continue;
      for (const auto& m : o.counterexample->matchings) {
        const auto a = m.assignment(e.instance.num_students());
        if (!testing::naive_blocking_pairs(e.instance, a).empty()) {
          ++unconfirmed;
        }
      }
    }
  }
  tally.report(v, Corpus().size());
  v.expect(unconfirmed == 0, std::to_string(unconfirmed) +
                                 " counterexample matchings are not stable");
  v.summary = "pairwise lemmas over " + std::to_string(Corpus().size()) +
              " instances (" + std::to_string(tally.cases) + " cases)";
  if (!v.passed && unconfirmed == 0) {
    v.notes.push_back("every counterexample re-checked stable by the naive "
                      "blocking-pair oracle");
  }
  return v;
}

Verdict CriterionSolvers() {
  Verdict v;
  for (const Entry& e : Corpus()) {
    const Matching low = meet_all(e.instance, e.set);
    const Matching high = join_all(e.instance, e.set);
    for (const SolveMethod method : {SolveMethod::kEnumerationExtremum,
                                     SolveMethod::kDeferredAcceptance}) {
      const Matching s = solve_student_optimal(e.instance, method);
      const Matching l = solve_lecturer_optimal(e.instance, method);
      const std::string where =
          " (" + to_string(method) + ", seed " + std::to_string(e.seed) + ")";
      v.expect(s == low, "student optimum differs from meet_all" + where);
      v.expect(l == high, "lecturer optimum differs from join_all" + where);
      v.expect(is_stable(e.instance, s) && is_stable(e.instance, l),
               "solver output unstable" + where);
    }
  }
  v.summary = "solvers (enum and da) over " + std::to_string(Corpus().size()) +
              " instances";
  return v;
}

Verdict CriterionFormats() {
  Verdict v;
  std::vector<std::pair<std::string, Instance>> all = {{"I1", testing::i1()},
                                                       {"I3", testing::i3()}};
  for (const Entry& e : Corpus()) {
    all.emplace_back("seed " + std::to_string(e.seed), e.instance);
  }
  for (const auto& [name, i] : all) {
    const std::string text = serialize_instance(i);
    const InstanceDescription back = parse_instance_description(text);
    v.expect(back == i.description(), name + ": parse(serialize) differs");
    v.expect(serialize_description(back) == text,
             name + ": serialize(parse(serialize)) differs");
    for (const auto& m : enumerate_all(i)) {
      v.expect(parse_matching_file(serialize_matching(m), i) == m,
               name + ": matching round trip differs");
    }
  }
  std::size_t goldens = 0;
  for (const auto& c : testing::golden_cases()) {
    const testing::CliRun first = testing::run_golden(c);
    const testing::CliRun second = testing::run_golden(c);
    ++goldens;
    v.expect(first.out == second.out && first.err == second.err &&
                 first.exit_code == second.exit_code,
             c.file + ": two runs differ");
    v.expect(first.out == testing::read_golden(c),
             c.file + ": differs from the pinned output");
    v.expect(first.exit_code == c.exit_code, c.file + ": exit code differs");
  }
  v.summary = "round trips on " + std::to_string(all.size()) +
              " instances, " + std::to_string(goldens) + " golden outputs";
  return v;
}

struct Criterion {
  const char* id;
  std::function<Verdict()> run;
  double budget_seconds;  // 0 = no budget
};

}  // namespace
}  // namespace spas

int main() {
  using spas::Criterion;
  const std::vector<Criterion> criteria = {
      {"C1", spas::CriterionI1, 1.0},
      {"C2", spas::CriterionI3, 5.0},
      {"C3", spas::CriterionOracle, 60.0},
      {"C4", spas::CriterionTheorem, 0},
      {"C5", spas::CriterionLattice, 0},
      {"C6", spas::CriterionLemmas, 0},
      {"C7", spas::CriterionSolvers, 0},
      {"C8", spas::CriterionFormats, 0},
  };
  // Build the shared corpus up front so its cost is not charged to C4.
  const auto corpus_start = std::chrono::steady_clock::now();
  spas::Corpus();
  const std::chrono::duration<double> corpus_time =
      std::chrono::steady_clock::now() - corpus_start;
  std::cout << "corpus: " << spas::Corpus().size() << " instances built in "
            << spas::Seconds(corpus_time.count()) << '\n';

  std::size_t passed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    spas::Verdict v = c.run();
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    std::string timing = spas::Seconds(elapsed.count());
    if (c.budget_seconds > 0) {
      timing += " of " + spas::Seconds(c.budget_seconds);
      if (elapsed.count() >= c.budget_seconds) v.fail("over time budget");
    }
    std::cout << (v.passed ? "PASS " : "FAIL ") << c.id << ' ' << v.summary
              << " [" << timing << "]\n";
    for (const auto& note : v.notes) std::cout << "    " << note << '\n';
    if (v.passed) ++passed;
  }
  std::cout << "acceptance: " << passed << '/' << criteria.size()
            << " criteria passed\n";
  return passed == criteria.size() ? 0 : 1;
}
