// Copyright 2026 The Zerocenter Authors.
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

#ifndef ZEROCENTER_CLI_H_
#define ZEROCENTER_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace zerocenter {

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitUnresolvable = 3,
  kExitSizeLimit = 4,
  kExitGoldMismatch = 5,
  kExitIo = 6,
  kExitOracleMismatch = 7,
};

// Runs the command line (without the program name):
//   resolve|check|oracle|validate <file> [--beam N] [--no-zta] [--trace]
//       [--format text|json] [--strict] [--no-established-cb]
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace zerocenter

#endif  // ZEROCENTER_CLI_H_
