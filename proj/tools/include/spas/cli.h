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


// The `spas` command-line tool as a callable function, so tests can drive it
// without spawning processes.
//
// Exit codes: 0 success or true, 1 false (unstable, invalid, failed
// property), 2 usage error or unreadable file, 3 enumeration size guard.

#ifndef SPAS_CLI_H_
#define SPAS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace spas {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeGuard = 3;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace spas

#endif  // SPAS_CLI_H_
