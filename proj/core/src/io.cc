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

#include "spas/io.h"

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "spas/errors.h"

namespace spas {
namespace {

// Guards against absurd headers allocating gigabytes.
constexpr std::uint64_t kMaxAgents = 1'000'000;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits on blanks; ':' is always a token of its own. Comment and blank
// lines yield no entry.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    start = end + 1;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size() && IsBlank(raw[i])) ++i;
    if (i == raw.size() || raw[i] == '#') {
      if (end == text.size()) break;
      continue;
    }
    while (i < raw.size()) {
      if (IsBlank(raw[i])) {
        ++i;
        continue;
      }
      const std::size_t from = i;
      if (raw[i] == ':') {
        ++i;
      } else {
        while (i < raw.size() && !IsBlank(raw[i]) && raw[i] != ':') ++i;
      }
      line.tokens.push_back({raw.substr(from, i - from), from + 1});
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

[[noreturn]] void Fail(const Line& line, const Token& token,
                       const std::string& message) {
  throw ParseError(line.number, token.column, message);
}

[[noreturn]] void FailAtEnd(const Line& line, const std::string& message) {
  std::size_t column = 1;
  if (!line.tokens.empty()) {
    const Token& last = line.tokens.back();
    column = last.column + last.text.size();
  }
  throw ParseError(line.number, column, message);
}

std::optional<std::uint64_t> ParseNumber(std::string_view s) {
  if (s.empty() || s.size() > 12) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::uint64_t ExpectNumber(const Line& line, const Token& token) {
  const auto value = ParseNumber(token.text);
  if (!value) Fail(line, token, "expected a non-negative integer");
  return *value;
}

// Returns the 0-based index of a `<prefix><n>` token with n >= 1.
std::optional<std::uint64_t> ParseId(std::string_view s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) return std::nullopt;
  const auto number = ParseNumber(s.substr(1));
  if (!number || *number == 0) return std::nullopt;
  return *number - 1;
}

std::uint64_t ExpectId(const Line& line, const Token& token, char prefix) {
  const auto index = ParseId(token.text, prefix);
  if (!index) {
    Fail(line, token,
         std::string("expected an identifier ") + prefix + "<n> with n >= 1");
  }
  if (*index >= UINT32_MAX) Fail(line, token, "identifier too large");
  return *index;
}

const Token& At(const Line& line, std::size_t i, const std::string& what) {
  if (i >= line.tokens.size()) FailAtEnd(line, "expected " + what);
  return line.tokens[i];
}

void ExpectWord(const Line& line, std::size_t i, std::string_view word) {
  const Token& token = At(line, i, "'" + std::string(word) + "'");
  if (token.text != word) {
    Fail(line, token, "expected '" + std::string(word) + "'");
  }
}

class InstanceParser {
 public:
  explicit InstanceParser(std::string_view text) : lines_(Tokenize(text)) {}

  InstanceDescription Run() {
    if (lines_.empty()) return d_;
    std::size_t next = 0;
    d_.num_students = Header(next++, "students");
    d_.num_projects = Header(next++, "projects");
    d_.num_lecturers = Header(next++, "lecturers");
    d_.resize();
    seen_students_.assign(d_.num_students, false);
    seen_projects_.assign(d_.num_projects, false);
    seen_lecturers_.assign(d_.num_lecturers, false);
    for (; next < lines_.size(); ++next) Entity(lines_[next]);
    return std::move(d_);
  }

 private:
  std::size_t Header(std::size_t index, std::string_view keyword) {
    if (index >= lines_.size()) {
      const Line& last = lines_.back();
      throw ParseError(last.number + 1, 1,
                       "missing '" + std::string(keyword) + "' header");
    }
    const Line& line = lines_[index];
    const Token& head = line.tokens.front();
    if (head.text != keyword) {
      Fail(line, head, "expected '" + std::string(keyword) + " <n>' header");
    }
    const std::uint64_t n = ExpectNumber(line, At(line, 1, "a count"));
    if (n > kMaxAgents) Fail(line, line.tokens[1], "count too large");
    if (line.tokens.size() > 2) Fail(line, line.tokens[2], "unexpected token");
    return static_cast<std::size_t>(n);
  }

  // Index of the line's subject, checked against its header and for repeats.
  std::size_t Subject(const Line& line, char prefix, std::size_t count,
                      std::vector<bool>& seen) {
    const Token& head = line.tokens.front();
    const std::uint64_t index = ExpectId(line, head, prefix);
    if (index >= count) {
      Fail(line, head,
           std::string(head.text) + " exceeds the declared count of " +
               std::to_string(count));
    }
    if (seen[index]) Fail(line, head, "second line for " + std::string(head.text));
    seen[index] = true;
    ExpectWord(line, 1, ":");
    return static_cast<std::size_t>(index);
  }

  void Entity(const Line& line) {
    const Token& head = line.tokens.front();
    switch (head.text[0]) {
      case 's': {
        const std::size_t i =
            Subject(line, 's', d_.num_students, seen_students_);
        auto& prefs = d_.student_preferences[i];
        for (std::size_t t = 2; t < line.tokens.size(); ++t) {
          prefs.push_back(ProjectId(
              static_cast<std::uint32_t>(ExpectId(line, line.tokens[t], 'p'))));
        }
        return;
      }
      case 'p': {
        const std::size_t j =
            Subject(line, 'p', d_.num_projects, seen_projects_);
        auto& spec = d_.projects[j];
        ExpectWord(line, 2, "capacity");
        spec.capacity = Capacity(line, 3);
        ExpectWord(line, 4, "lecturer");
        // '-' (no owner) is what serialize_description() writes for a
        // description that lacks one; build_instance() rejects it.
        const Token& owner = At(line, 5, "a lecturer");
        if (owner.text != "-") {
          spec.lecturer = LecturerId(
              static_cast<std::uint32_t>(ExpectId(line, owner, 'l')));
        }
        if (line.tokens.size() > 6) {
          Fail(line, line.tokens[6], "unexpected token");
        }
        return;
      }
      case 'l': {
        const std::size_t k =
            Subject(line, 'l', d_.num_lecturers, seen_lecturers_);
        auto& spec = d_.lecturers[k];
        ExpectWord(line, 2, "capacity");
        spec.capacity = Capacity(line, 3);
        ExpectWord(line, 4, ":");
        for (std::size_t t = 5; t < line.tokens.size(); ++t) {
          spec.preferences.push_back(StudentId(
              static_cast<std::uint32_t>(ExpectId(line, line.tokens[t], 's'))));
        }
        return;
      }
      default:
        Fail(line, head, "expected a line starting with s<i>, p<j> or l<k>");
    }
  }

  std::uint32_t Capacity(const Line& line, std::size_t i) {
    const Token& token = At(line, i, "a capacity");
    const std::uint64_t c = ExpectNumber(line, token);
    if (c > UINT32_MAX) Fail(line, token, "capacity too large");
    return static_cast<std::uint32_t>(c);
  }

  std::vector<Line> lines_;
  InstanceDescription d_;
  std::vector<bool> seen_students_;
  std::vector<bool> seen_projects_;
  std::vector<bool> seen_lecturers_;
};

template <typename T>
void AppendIds(std::ostringstream& out, const std::vector<T>& ids) {
  for (const T& id : ids) out << ' ' << id;
}

}  // namespace

InstanceDescription parse_instance_description(std::string_view text) {
  return InstanceParser(text).Run();
}

BuildResult parse_instance_file(std::string_view text) {
  try {
    return build_instance(parse_instance_description(text));
  } catch (const ParseError& e) {
    BuildResult result;
    result.report.errors.push_back(
        {Rule::kSyntax,
         {"line " + std::to_string(e.line()) + " column " +
          std::to_string(e.column())},
         e.detail()});
    return result;
  }
}

std::string serialize_description(const InstanceDescription& d) {
  std::ostringstream out;
  out << "students " << d.num_students << '\n'
      << "projects " << d.num_projects << '\n'
      << "lecturers " << d.num_lecturers << '\n';
  for (std::size_t i = 0; i < d.student_preferences.size(); ++i) {
    out << StudentId(static_cast<std::uint32_t>(i)) << " :";
    AppendIds(out, d.student_preferences[i]);
    out << '\n';
  }
  for (std::size_t j = 0; j < d.projects.size(); ++j) {
    out << ProjectId(static_cast<std::uint32_t>(j)) << " : capacity "
        << d.projects[j].capacity << " lecturer ";
    if (d.projects[j].lecturer) {
      out << *d.projects[j].lecturer;
    } else {
      out << '-';
    }
    out << '\n';
  }
  for (std::size_t k = 0; k < d.lecturers.size(); ++k) {
    out << LecturerId(static_cast<std::uint32_t>(k)) << " : capacity "
        << d.lecturers[k].capacity << " :";
    AppendIds(out, d.lecturers[k].preferences);
    out << '\n';
  }
  return out.str();
}

std::string serialize_instance(const Instance& instance) {
  return serialize_description(instance.description());
}

Matching parse_matching_file(std::string_view text, const Instance& instance) {
  std::vector<Matching::Pair> pairs;
  std::vector<bool> seen(instance.num_students(), false);
  for (const Line& line : Tokenize(text)) {
    const Token& head = line.tokens.front();
    const std::uint64_t i = ExpectId(line, head, 's');
    if (i >= instance.num_students()) {
      Fail(line, head, "unknown student " + std::string(head.text));
    }
    if (seen[i]) Fail(line, head, "second line for " + std::string(head.text));
    seen[i] = true;
    const Token& target = At(line, 1, "a project or '-'");
    if (line.tokens.size() > 2) Fail(line, line.tokens[2], "unexpected token");
    if (target.text == "-") continue;
    const std::uint64_t j = ExpectId(line, target, 'p');
    if (j >= instance.num_projects()) {
      Fail(line, target, "unknown project " + std::string(target.text));
    }
    pairs.emplace_back(StudentId(static_cast<std::uint32_t>(i)),
                       ProjectId(static_cast<std::uint32_t>(j)));
  }
  return Matching(std::move(pairs));
}

std::string serialize_matching(const Matching& m) {
  std::ostringstream out;
  for (const auto& [s, p] : m.pairs()) out << s << ' ' << p << '\n';
  return out.str();
}

std::string format_inline(const Matching& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, p] : m.pairs()) {
    if (!first) out << ' ';
    first = false;
    out << s << ':' << p;
  }
  return out.str();
}

std::string format_blocking_pairs(const std::vector<BlockingPair>& pairs) {
  std::ostringstream out;
  for (const auto& bp : pairs) {
    out << bp.student << ' ' << bp.project << ' '
        << to_string(bp.student_condition) << ' '
        << to_string(bp.project_condition) << '\n';
  }
  return out.str();
}

std::string emit_dot(const HasseDiagram& diagram) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    out << "  M" << i + 1 << " [label=\"M" << i + 1 << "\", tooltip=\""
        << format_inline(diagram.nodes()[i]) << "\"];\n";
  }
  for (const auto& [from, to] : diagram.edges()) {
    out << "  M" << from + 1 << " -> M" << to + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_hasse(const HasseDiagram& diagram) {
  std::ostringstream out;
  out << "nodes " << diagram.size() << '\n';
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    out << 'M' << i + 1 << ' ' << format_inline(diagram.nodes()[i]) << '\n';
  }
  out << "edges " << diagram.edges().size() << '\n';
  for (const auto& [from, to] : diagram.edges()) {
    out << 'M' << from + 1 << " -> M" << to + 1 << '\n';
  }
  return out.str();
}

std::string render_report_text(const PropertyReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& o : report.outcomes()) {
    out << (o.passed ? "PASS " : "FAIL ") << o.property << " cases=" << o.cases
        << '\n';
    if (o.passed) {
      ++passed;
      continue;
    }
    if (!o.counterexample) continue;
    const Counterexample& c = *o.counterexample;
    out << "  detail: " << c.detail << '\n';
    if (!c.agents.empty()) {
      out << "  agents:";
      for (const auto& a : c.agents) out << ' ' << a;
      out << '\n';
    }
    for (const auto& m : c.matchings) out << "  matching: " << format_inline(m) << '\n';
  }
  out << "passed " << passed << '/' << report.outcomes().size() << '\n';
  return out.str();
}

std::string render_report_json(const PropertyReport& report) {
  nlohmann::json properties = nlohmann::json::array();
  for (const auto& o : report.outcomes()) {
    nlohmann::json entry = {
        {"property", o.property}, {"passed", o.passed}, {"cases", o.cases}};
    if (o.counterexample) {
      nlohmann::json matchings = nlohmann::json::array();
      for (const auto& m : o.counterexample->matchings) {
        matchings.push_back(format_inline(m));
      }
      entry["counterexample"] = {{"detail", o.counterexample->detail},
                                 {"agents", o.counterexample->agents},
                                 {"matchings", matchings}};
    }
    properties.push_back(std::move(entry));
  }
  const nlohmann::json root = {{"passed", report.passed()},
                               {"properties", properties}};
  return root.dump(2) + "\n";
}

}  // namespace spas
