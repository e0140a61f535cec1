// Copyright 2026 The RSBM Authors.
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

#ifndef RSBM_CLI_HPP_
#define RSBM_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "rsbm/experiment.hpp"

namespace rsbm {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitIo = 3;

// Runs one subcommand on a fully resolved config and returns its payload.
// Pure: no files are read or written, so the same config always yields the
// same payload.
Json execute(const std::string& subcommand, const Json& config);

// argv-style entry point; args[0] is the program name. Reports go to `out`
// (or --out), machine-readable errors to `err`. Every run is appended to
// the experiment log.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

struct ReplayOutcome {
  bool identical = false;
  std::string logged;
  std::string replayed;
};

ReplayOutcome replay(const ExperimentRecord& record);

}  // namespace rsbm

#endif  // RSBM_CLI_HPP_
