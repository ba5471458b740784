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


#include "spas/cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "spas/enumeration.h"
#include "spas/errors.h"
#include "spas/generator.h"
#include "spas/instance.h"
#include "spas/io.h"
#include "spas/lattice.h"
#include "spas/matching.h"
#include "spas/solvers.h"
#include "spas/stability.h"
#include "spas/verification.h"

namespace spas {
namespace {

// Carries an exit code and a message out of a command.
class CliFailure : public std::runtime_error {
 public:
  CliFailure(int code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure(kExitUsage, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw CliFailure(kExitUsage, "cannot write " + path);
}

Instance LoadInstance(const std::string& path) {
  BuildResult result = parse_instance_file(ReadFile(path));
  if (!result) {
    throw CliFailure(kExitFalse,
                     path + ": invalid instance\n" + describe(result.report));
  }
  return std::move(*result.instance);
}

Matching LoadMatching(const std::string& path, const Instance& instance) {
  Matching m;
  try {
    m = parse_matching_file(ReadFile(path), instance);
  } catch (const ParseError& e) {
    throw CliFailure(kExitFalse, path + ": " + e.what());
  }
  const ValidationReport report = validate_matching(instance, m);
  if (!report.ok()) {
    throw CliFailure(kExitFalse,
                     path + ": invalid matching\n" + describe(report));
  }
  return m;
}

struct Options {
  std::string instance;
  std::string first;
  std::string second;
  std::string dot;
  std::string out;
  std::string optimal = "student";
  std::string method = "enum";
  bool force = false;
  bool parallel = false;
  bool count_only = false;
  bool pairs = false;
  bool all = false;
  bool json = false;
  GenParams gen;
};

EnumerateOptions EnumOptions(const Options& o) {
  EnumerateOptions e;
  e.force = o.force;
  e.parallel = o.parallel;
  return e;
}

int Validate(const Options& o, std::ostream& out) {
  const BuildResult result = parse_instance_file(ReadFile(o.instance));
  out << (result ? "valid\n" : "invalid\n") << describe(result.report);
  return result ? kExitOk : kExitFalse;
}

int Check(const Options& o, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  const Matching m = LoadMatching(o.first, instance);
  const auto pairs = find_blocking_pairs(instance, m);
  if (pairs.empty()) {
    out << "STABLE\n";
    return kExitOk;
  }
  out << format_blocking_pairs(pairs);
  return kExitFalse;
}

int Solve(const Options& o, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  const SolveMethod method = *parse_solve_method(o.method);
  const Matching m =
      o.optimal == "student"
          ? solve_student_optimal(instance, method, EnumOptions(o))
          : solve_lecturer_optimal(instance, method, EnumOptions(o));
  out << serialize_matching(m);
  return kExitOk;
}

int Enumerate(const Options& o, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  const StableSet set = enumerate_all(instance, EnumOptions(o));
  if (o.count_only) {
    out << set.size() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << 'M' << i + 1 << ' ' << format_inline(set[i]) << '\n';
  }
  return kExitOk;
}

int MeetOrJoin(const Options& o, bool is_meet, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  const Matching a = LoadMatching(o.first, instance);
  const Matching b = LoadMatching(o.second, instance);
  out << serialize_matching(is_meet ? meet(instance, a, b)
                                    : join(instance, a, b));
  return kExitOk;
}

int Lattice(const Options& o, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  const HasseDiagram diagram =
      build_hasse(instance, enumerate_all(instance, EnumOptions(o)));
  out << format_hasse(diagram);
  if (!o.dot.empty()) WriteFile(o.dot, emit_dot(diagram));
  return kExitOk;
}

int Verify(const Options& o, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  const StableSet set = enumerate_all(instance, EnumOptions(o));
  PropertyReport report;
  if (o.all) {
    report = verify_all(instance, set);
  } else if (o.pairs) {
    report = check_pairwise_lemmas(instance, set);
  } else {
    report = check_unpopular_projects(instance, set);
    report.merge(check_lattice_axioms(instance, set));
  }
  out << (o.json ? render_report_json(report) : render_report_text(report));
  return report.passed() ? kExitOk : kExitFalse;
}

int Gen(const Options& o, std::ostream& out) {
  try {
    check_params(o.gen);
  } catch (const InfeasibleParamsError& e) {
    throw CliFailure(kExitUsage, e.what());
  }
  const std::string text = serialize_description(generate_description(o.gen));
  if (o.out.empty()) {
    out << text;
  } else {
    WriteFile(o.out, text);
  }
  return kExitOk;
}

void EndLine(std::ostream& err, const std::string& message) {
  err << message;
  if (message.empty() || message.back() != '\n') err << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Student-project allocation with lecturer preferences."};
  app.name("spas");
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Validate an instance file");
  validate->add_option("instance", o.instance)->required();

  auto* check = app.add_subcommand("check", "Check a matching for stability");
  check->add_option("instance", o.instance)->required();
  check->add_option("matching", o.first)->required();

  auto* solve = app.add_subcommand("solve", "Print an optimal stable matching");
  solve->add_option("--optimal", o.optimal, "student or lecturer")
      ->required()
      ->check(CLI::IsMember({"student", "lecturer"}));
  solve->add_option("--method", o.method, "enum (default) or da")
      ->check(CLI::IsMember({"enum", "da"}));
  solve->add_flag("--force", o.force, "Ignore the enumeration size guard");
  solve->add_option("instance", o.instance)->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "List every stable matching");
  enumerate->add_flag("--count-only", o.count_only, "Print only the count");
  enumerate->add_flag("--force", o.force, "Ignore the size guard");
  enumerate->add_flag("--parallel", o.parallel, "Use several threads");
  enumerate->add_option("instance", o.instance)->required();

  CLI::App* binary[2];
  const char* binary_names[2] = {"meet", "join"};
  for (int k = 0; k < 2; ++k) {
    binary[k] = app.add_subcommand(
        binary_names[k],
        k == 0 ? "Student-wise better of two stable matchings"
               : "Student-wise worse of two stable matchings");
    binary[k]->add_option("instance", o.instance)->required();
    binary[k]->add_option("m1", o.first)->required();
    binary[k]->add_option("m2", o.second)->required();
  }

  auto* lattice =
      app.add_subcommand("lattice", "Print the Hasse diagram of the lattice");
  lattice->add_option("--dot", o.dot, "Also write a Graphviz file");
  lattice->add_flag("--force", o.force, "Ignore the size guard");
  lattice->add_option("instance", o.instance)->required();

  auto* verify = app.add_subcommand("verify", "Check structural properties");
  auto* pairs_flag =
      verify->add_flag("--pairs", o.pairs, "Pairwise checks only");
  verify->add_flag("--all", o.all, "Every check")->excludes(pairs_flag);
  verify->add_flag("--json", o.json, "Machine-readable report");
  verify->add_flag("--force", o.force, "Ignore the size guard");
  verify->add_option("instance", o.instance)->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--students", o.gen.students)->required();
  gen->add_option("--projects", o.gen.projects)->required();
  gen->add_option("--lecturers", o.gen.lecturers)->required();
  gen->add_option("--seed", o.gen.seed)->required();
  gen->add_option("--density", o.gen.density, "Default 0.5");
  gen->add_option("--min-list", o.gen.min_list_length, "Default 1");
  gen->add_option("--max-list", o.gen.max_list_length, "Default 4");
  gen->add_option("--max-capacity", o.gen.max_project_capacity, "Default 2");
  gen->add_option("--out", o.out, "Write here instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return Validate(o, out);
    if (check->parsed()) return Check(o, out);
    if (solve->parsed()) return Solve(o, out);
    if (enumerate->parsed()) return Enumerate(o, out);
    if (binary[0]->parsed()) return MeetOrJoin(o, true, out);
    if (binary[1]->parsed()) return MeetOrJoin(o, false, out);
    if (lattice->parsed()) return Lattice(o, out);
    if (verify->parsed()) return Verify(o, out);
    if (gen->parsed()) return Gen(o, out);
  } catch (const CliFailure& e) {
    EndLine(err, e.what());
    return e.code();
  } catch (const SizeGuardError& e) {
    EndLine(err, e.what());
    return kExitSizeGuard;
  } catch (const Error& e) {
    // Unstable inputs to meet/join and similar domain refusals.
    EndLine(err, e.what());
    return kExitFalse;
  }
  return kExitUsage;
}

}  // namespace spas
