// Copyright 2026 The pomlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POMLAB_TOOLS_CLI_H_
#define POMLAB_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace pomlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

// Entry point behind the pomlab binary. args[0] is the program name and is
// not recorded in reports. Reports go to `out` unless --out names a file.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pomlab::cli

#endif  // POMLAB_TOOLS_CLI_H_
