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

// Text formats.
//
// Instance files are line oriented. Blank lines and lines whose first
// non-blank character is '#' are ignored. Three headers come first:
//
//   students <n1>
//   projects <n2>
//   lecturers <n3>
//
// followed, in any order, by one line per agent:
//
//   s<i> : p<a> p<b> ...                    most preferred first
//   p<j> : capacity <c> lecturer l<k>
//   l<k> : capacity <d> : s<a> s<b> ...     most preferred first
//
// Matching files hold one `s<i> p<j>` or `s<i> -` line per student;
// students not mentioned are unassigned.

#ifndef SPAS_IO_H_
#define SPAS_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "spas/instance.h"
#include "spas/lattice.h"
#include "spas/matching.h"
#include "spas/stability.h"
#include "spas/verification.h"

namespace spas {

// Syntax only; throws ParseError with a 1-based line and column.
InstanceDescription parse_instance_description(std::string_view text);

// Syntax errors are reported as a kSyntax violation; semantic rules are
// checked by build_instance().
BuildResult parse_instance_file(std::string_view text);

// Canonical text: headers, then students, projects and lecturers ascending.
std::string serialize_instance(const Instance& instance);
std::string serialize_description(const InstanceDescription& description);

// Throws ParseError on malformed lines, ids outside the instance, or a
// student listed twice. Does not check acceptability or capacities.
Matching parse_matching_file(std::string_view text, const Instance& instance);

std::string serialize_matching(const Matching& m);

// "s1:p1 s2:p3"
std::string format_inline(const Matching& m);

// One "<student> <project> <S-cond> <P-cond>" line per pair.
std::string format_blocking_pairs(const std::vector<BlockingPair>& pairs);

// Graphviz digraph; node i is named M<i+1>.
std::string emit_dot(const HasseDiagram& diagram);

// "nodes k", one "M<i> <inline matching>" line per node, "edges e", then
// one "M<i> -> M<j>" line per edge.
std::string format_hasse(const HasseDiagram& diagram);

std::string render_report_text(const PropertyReport& report);
std::string render_report_json(const PropertyReport& report);

}  // namespace spas

#endif  // SPAS_IO_H_
