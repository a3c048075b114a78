// Copyright 2026 The CiteScope Authors.
//
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

#ifndef CITESCOPE_TOOLS_CLI_H_
#define CITESCOPE_TOOLS_CLI_H_

#include <ostream>

namespace citescope::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDataError = 2,
  kExitRuntimeError = 3,
};

// Entry point of `cite-scope`; returns the process exit code.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace citescope::cli

#endif  // CITESCOPE_TOOLS_CLI_H_
