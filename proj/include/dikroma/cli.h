// Copyright 2026 The Dikroma Authors
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

#ifndef DIKROMA_CLI_H_
#define DIKROMA_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dikroma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
// A solver budget ran out before the answer was decided.
inline constexpr int kExitUnknown = 3;
// The command ran but its check came out negative (failed verification,
// interpolation gap).
inline constexpr int kExitRejected = 4;

// Runs one command line (without the program name). Results go to `out`
// (or to --out files); errors are written to `err` as a JSON object
// {"error": {"kind": ..., "message": ...}}.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dikroma::cli

#endif  // DIKROMA_CLI_H_
