// Copyright 2026 The sigev Authors
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

// The sigev command-line front end, kept separate from main() so tests can
// drive it in-process.

#ifndef SIGEV_TOOLS_CLI_H_
#define SIGEV_TOOLS_CLI_H_

#include <ostream>

namespace sigev {

// Exit codes: 0 success, 1 validation error, 2 solver failure. Errors are
// written to `err` as a JSON object.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace sigev

#endif  // SIGEV_TOOLS_CLI_H_
