// Copyright 2026 The axidir Authors
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

// Command-line front end. run_cli holds all logic so tests can drive it
// in-process; the executable only forwards argv.

#ifndef AXIDIR_CLI_HPP_
#define AXIDIR_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace axidir::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kTDesignFailed = 1,
  kInvalidArgs = 2,
  kIoError = 3,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// %.12g, "nan"/"inf" for non-finite values.
std::string format_number(double v);

}  // namespace axidir::cli

#endif  // AXIDIR_CLI_HPP_
