// Copyright 2026 The Toastflow Authors
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


#ifndef TOASTFLOW_TOOLS_CLI_H_
#define TOASTFLOW_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace toastflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a check ran and did not pass
inline constexpr int kExitInput = 2;   // bad flags, files or parameters

// Runs one command. `args` excludes the program name; args[0] is the
// command. Reports go to `out`, diagnostics to `err`.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace toastflow::cli

#endif  // TOASTFLOW_TOOLS_CLI_H_
