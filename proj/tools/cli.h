// Copyright 2026 The ntilde Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NTILDE_TOOLS_CLI_H_
#define NTILDE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ntilde::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // exhausted-unsat, failed verification or lifting
  kUsage = 2,
  kInput = 3,
  kLimit = 4,  // size guard or variable cap
};

// Runs one command line. `args` excludes the program name. Input "-" reads
// `in`; results go to `out` (or the --output file), diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ntilde::cli

#endif  // NTILDE_TOOLS_CLI_H_
